#include "hallfix/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "hallfix/errors.hpp"

namespace hallfix {

struct PermGroup::Data {
  unsigned degree;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::size_t> index;
};

namespace {

std::shared_ptr<PermGroup::Data const> make_data(unsigned degree,
                                                 std::vector<Permutation> generators,
                                                 std::vector<Permutation> elements)
{
  auto d = std::make_shared<PermGroup::Data>();
  std::sort(elements.begin(), elements.end());
  d->degree = degree;
  d->generators = std::move(generators);
  d->elements = std::move(elements);
  d->index.reserve(d->elements.size());
  for (std::size_t i = 0; i < d->elements.size(); ++i)
    d->index.emplace(d->elements[i], i);
  return d;
}

void check_degree(Permutation const &p, unsigned degree)
{
  if (p.degree() != degree)
    throw InvalidArgument("permutation " + p.to_string() + " has degree " +
                          std::to_string(p.degree()) + ", expected " + std::to_string(degree));
}

// Element-index view of a group with a lazily filled multiplication table.
// Subgroup searches work on indices so closures need no hashing.
class IndexedGroup {
public:
  static constexpr std::uint64_t table_limit = 1500;
  static constexpr std::uint32_t unset = 0xffffffffu;

  explicit IndexedGroup(PermGroup const &g)
  : _g(g), _n(g.order())
  {
    if (_n <= table_limit)
      _table.assign(_n * _n, unset);
    _orders.resize(_n);
    for (std::size_t i = 0; i < _n; ++i)
      _orders[i] = element_order(g.element(i));
  }

  std::size_t size() const noexcept { return _n; }
  std::uint64_t order_of(std::uint32_t i) const { return _orders[i]; }
  PermGroup const &group() const noexcept { return _g; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b)
  {
    if (_table.empty())
      return compute(a, b);
    auto &slot = _table[a * _n + b];
    if (slot == unset)
      slot = compute(a, b);
    return slot;
  }

private:
  std::uint32_t compute(std::uint32_t a, std::uint32_t b) const
  {
    return static_cast<std::uint32_t>(*_g.index_of(_g.element(a) * _g.element(b)));
  }

  PermGroup _g;
  std::size_t _n;
  std::vector<std::uint32_t> _table;
  std::vector<std::uint64_t> _orders;
};

struct IndexSubgroup {
  std::vector<std::uint32_t> elements; // identity first
  std::vector<std::uint32_t> generators;
};

// Dimino extension: <K, g> as a union of right cosets of K. Returns nullopt
// as soon as the result would exceed `limit` elements. `mark` must be a
// zeroed scratch buffer of size |G|; it is left zeroed.
std::optional<IndexSubgroup> extend(IndexedGroup &ig, IndexSubgroup const &k, std::uint32_t g,
                                    std::uint64_t limit, std::vector<char> &mark)
{
  IndexSubgroup res{k.elements, k.generators};
  res.generators.push_back(g);

  for (auto e : res.elements)
    mark[e] = 1;

  auto cleanup = [&] {
    for (auto e : res.elements)
      mark[e] = 0;
  };

  if (mark[g]) {
    cleanup();
    res.generators.pop_back();
    return res;
  }

  std::size_t const ksize = k.elements.size();
  std::vector<std::uint32_t> reps{k.elements.front()};

  auto add_coset = [&](std::uint32_t r) {
    if (res.elements.size() + ksize > limit)
      return false;
    reps.push_back(r);
    for (std::size_t i = 0; i < ksize; ++i) {
      auto e = ig.mul(k.elements[i], r);
      mark[e] = 1;
      res.elements.push_back(e);
    }
    return true;
  };

  if (!add_coset(g)) {
    cleanup();
    return std::nullopt;
  }

  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    for (auto s : res.generators) {
      auto e = ig.mul(reps[ri], s);
      if (mark[e])
        continue;
      if (!add_coset(e)) {
        cleanup();
        return std::nullopt;
      }
    }
  }

  cleanup();
  return res;
}

std::vector<std::uint32_t> sorted_key(std::vector<std::uint32_t> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

PermGroup to_perm_group(IndexedGroup const &ig, IndexSubgroup const &s)
{
  std::vector<Permutation> gens, elems;
  gens.reserve(s.generators.size());
  elems.reserve(s.elements.size());
  for (auto i : s.generators)
    gens.push_back(ig.group().element(i));
  for (auto i : s.elements)
    elems.push_back(ig.group().element(i));
  return PermGroup::from_elements(ig.group().degree(), std::move(gens), std::move(elems));
}

IndexSubgroup trivial_index_subgroup(IndexedGroup const &ig)
{
  auto id = ig.group().index_of(Permutation::identity(ig.group().degree()));
  return IndexSubgroup{{static_cast<std::uint32_t>(*id)}, {}};
}

void require_subgroup(PermGroup const &h, PermGroup const &g, char const *what)
{
  if (!h.is_subgroup_of(g))
    throw InvalidArgument(std::string(what) + ": not a subgroup of the given group");
}

} // namespace

PermGroup::PermGroup()
: PermGroup(make_data(1, {}, {Permutation::identity(1)}))
{}

PermGroup::PermGroup(std::shared_ptr<Data const> data)
: _data(std::move(data))
{}

PermGroup PermGroup::trivial(unsigned degree)
{
  return PermGroup(make_data(degree, {}, {Permutation::identity(degree)}));
}

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Permutation> generators,
                                   std::vector<Permutation> elements)
{
  for (auto const &e : elements)
    check_degree(e, degree);
  for (auto const &g : generators)
    check_degree(g, degree);

  auto data = std::make_shared<Data>(*make_data(degree, {}, std::move(elements)));
  auto const &elems = data->elements;
  if (data->index.size() != elems.size())
    throw InvalidArgument("element list contains duplicates");
  if (elems.empty() || !elems.front().is_identity())
    throw InvalidArgument("element list lacks the identity");

  // Breadth-first closure of the generators inside the element list. With
  // no generators given, elements outside the current closure are adopted
  // as generators one at a time.
  std::vector<bool> reached(elems.size(), false);
  std::vector<std::size_t> queue{0};
  reached[0] = true;
  std::vector<Permutation> gens;

  auto adopt = [&](Permutation const &s) {
    gens.push_back(s);
    auto const old = queue.size();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t const first = i < old ? gens.size() - 1u : 0u;
      for (std::size_t j = first; j < gens.size(); ++j) {
        auto it = data->index.find(elems[queue[i]] * gens[j]);
        if (it == data->index.end())
          throw InvalidArgument("element list is not closed under multiplication");
        if (!reached[it->second]) {
          reached[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
  };

  if (generators.empty()) {
    for (std::size_t i = 1; i < elems.size(); ++i) {
      if (!reached[i])
        adopt(elems[i]);
    }
  } else {
    for (auto const &g : generators) {
      if (!data->index.contains(g))
        throw InvalidArgument("generator " + g.to_string() + " outside the element list");
      adopt(g);
    }
    gens = std::move(generators);
  }

  if (queue.size() != elems.size())
    throw InvalidArgument("generators do not generate the element list");

  data->generators = std::move(gens);
  return PermGroup(std::move(data));
}

unsigned PermGroup::degree() const noexcept { return _data->degree; }

std::vector<Permutation> const &PermGroup::generators() const noexcept
{
  return _data->generators;
}

std::vector<Permutation> const &PermGroup::elements() const noexcept
{
  return _data->elements;
}

std::uint64_t PermGroup::order() const noexcept { return _data->elements.size(); }

std::optional<std::size_t> PermGroup::index_of(Permutation const &g) const
{
  if (g.degree() != degree())
    return std::nullopt;
  auto it = _data->index.find(g);
  if (it == _data->index.end())
    return std::nullopt;
  return it->second;
}

bool PermGroup::is_abelian() const
{
  auto const &gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
    }
  }
  return true;
}

bool PermGroup::is_cyclic() const
{
  for (auto const &e : elements()) {
    if (element_order(e) == order())
      return true;
  }
  return false;
}

bool PermGroup::is_subgroup_of(PermGroup const &g) const
{
  if (degree() != g.degree() || g.order() % order() != 0u)
    return false;
  for (auto const &e : elements()) {
    if (!g.contains(e))
      return false;
  }
  return true;
}

std::string PermGroup::to_string() const
{
  std::string res = "<";
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (i)
      res += ", ";
    res += generators()[i].to_string();
  }
  return res + ">";
}

bool operator==(PermGroup const &a, PermGroup const &b)
{
  return a._data == b._data ||
         (a.degree() == b.degree() && a.elements() == b.elements());
}

PermGroup close(std::vector<Permutation> const &generators, unsigned degree, std::uint64_t cap)
{
  if (degree == 0u)
    throw InvalidArgument("group degree must be positive");
  for (auto const &g : generators)
    check_degree(g, degree);

  std::vector<Permutation> gens;
  for (auto const &g : generators) {
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_map<Permutation, std::size_t> seen{{elems.front(), 0}};

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const &s : gens) {
      auto e = elems[i] * s;
      if (seen.contains(e))
        continue;
      if (elems.size() >= cap)
        throw CapExceeded("group order", cap);
      seen.emplace(e, elems.size());
      elems.push_back(std::move(e));
    }
  }

  return PermGroup(make_data(degree, generators, std::move(elems)));
}

PermGroup subgroup(PermGroup const &group, std::vector<Permutation> const &generators)
{
  for (auto const &g : generators) {
    if (!group.contains(g))
      throw InvalidArgument("generator " + g.to_string() + " not in the group");
  }
  return close(generators, group.degree(), group.order());
}

PermGroup centralizer(PermGroup const &g, Permutation const &s)
{
  if (!g.contains(s))
    throw InvalidArgument("centralizer: element not in the group");
  return centralizer_in(g, s);
}

PermGroup centralizer(PermGroup const &g, PermGroup const &s)
{
  require_subgroup(s, g, "centralizer");
  return centralizer_in(g, s);
}

PermGroup centralizer_in(PermGroup const &n, Permutation const &x)
{
  check_degree(x, n.degree());
  std::vector<Permutation> elems;
  for (auto const &e : n.elements()) {
    if (e * x == x * e)
      elems.push_back(e);
  }
  return PermGroup::from_elements(n.degree(), {}, std::move(elems));
}

PermGroup centralizer_in(PermGroup const &n, PermGroup const &s)
{
  if (s.degree() != n.degree())
    throw InvalidArgument("centralizer: degree mismatch");
  auto const &pool = s.generators().empty() ? s.elements() : s.generators();
  std::vector<Permutation> elems;
  for (auto const &e : n.elements()) {
    bool ok = std::all_of(pool.begin(), pool.end(),
                          [&](Permutation const &x) { return e * x == x * e; });
    if (ok)
      elems.push_back(e);
  }
  return PermGroup::from_elements(n.degree(), {}, std::move(elems));
}

PermGroup normalizer(PermGroup const &g, PermGroup const &h)
{
  require_subgroup(h, g, "normalizer");
  auto const &pool = h.generators().empty() ? h.elements() : h.generators();
  std::vector<Permutation> elems;
  for (auto const &x : g.elements()) {
    auto xi = x.inverse();
    bool ok = std::all_of(pool.begin(), pool.end(),
                          [&](Permutation const &y) { return h.contains(x * y * xi); });
    if (ok)
      elems.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), {}, std::move(elems));
}

bool is_normal(PermGroup const &g, PermGroup const &h)
{
  return h.is_subgroup_of(g) && normalizer(g, h).order() == g.order();
}

PermGroup conjugate(PermGroup const &h, Permutation const &g)
{
  check_degree(g, h.degree());
  auto gi = g.inverse();
  std::vector<Permutation> gens, elems;
  for (auto const &x : h.generators())
    gens.push_back(g * x * gi);
  for (auto const &x : h.elements())
    elems.push_back(g * x * gi);
  return PermGroup::from_elements(h.degree(), std::move(gens), std::move(elems));
}

std::vector<PermGroup> conjugates(PermGroup const &g, PermGroup const &h)
{
  require_subgroup(h, g, "conjugates");
  std::vector<PermGroup> res;
  std::set<std::vector<Permutation>> seen;
  for (auto const &x : g.elements()) {
    auto c = conjugate(h, x);
    if (seen.insert(c.elements()).second)
      res.push_back(std::move(c));
  }
  return res;
}

PermGroup intersection(PermGroup const &a, PermGroup const &b)
{
  if (a.degree() != b.degree())
    throw InvalidArgument("intersection: degree mismatch");
  std::vector<Permutation> elems;
  for (auto const &e : a.elements()) {
    if (b.contains(e))
      elems.push_back(e);
  }
  return PermGroup::from_elements(a.degree(), {}, std::move(elems));
}

std::vector<std::vector<Permutation>> conjugacy_classes(PermGroup const &g)
{
  std::vector<std::vector<Permutation>> res;
  std::vector<bool> done(g.order(), false);
  auto const &pool = g.generators().empty() ? g.elements() : g.generators();

  for (std::size_t i = 0; i < g.order(); ++i) {
    if (done[i])
      continue;
    std::vector<Permutation> cls{g.element(i)};
    done[i] = true;
    for (std::size_t j = 0; j < cls.size(); ++j) {
      for (auto const &s : pool) {
        auto c = s * cls[j] * s.inverse();
        auto k = *g.index_of(c);
        if (!done[k]) {
          done[k] = true;
          cls.push_back(std::move(c));
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    res.push_back(std::move(cls));
  }
  return res;
}

std::vector<PermGroup> subgroups_of_order(PermGroup const &g, std::uint64_t m)
{
  if (m == 0u || g.order() % m != 0u)
    throw InvalidArgument("subgroups_of_order: " + std::to_string(m) +
                          " does not divide " + std::to_string(g.order()));
  if (m == 1u)
    return {PermGroup::trivial(g.degree())};
  if (m == g.order())
    return {g};

  IndexedGroup ig(g);
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t i = 0; i < ig.size(); ++i) {
    if (ig.order_of(i) > 1u && m % ig.order_of(i) == 0u)
      candidates.push_back(i);
  }

  std::vector<char> mark(ig.size(), 0);
  std::set<std::vector<std::uint32_t>> visited;
  std::vector<std::pair<std::vector<std::uint32_t>, IndexSubgroup>> found;
  std::vector<IndexSubgroup> stack{trivial_index_subgroup(ig)};

  while (!stack.empty()) {
    auto k = std::move(stack.back());
    stack.pop_back();

    for (auto c : candidates) {
      if (std::find(k.elements.begin(), k.elements.end(), c) != k.elements.end())
        continue;
      auto l = extend(ig, k, c, m, mark);
      if (!l || m % l->elements.size() != 0u)
        continue;
      auto key = sorted_key(l->elements);
      if (!visited.insert(key).second)
        continue;
      if (l->elements.size() == m)
        found.emplace_back(std::move(key), std::move(*l));
      else
        stack.push_back(std::move(*l));
    }
  }

  std::sort(found.begin(), found.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });

  std::vector<PermGroup> res;
  res.reserve(found.size());
  for (auto const &[key, sub] : found)
    res.push_back(to_perm_group(ig, sub));
  return res;
}

std::vector<PermGroup> normal_subgroups(PermGroup const &g)
{
  IndexedGroup ig(g);

  std::vector<std::vector<std::uint32_t>> classes;
  for (auto const &cls : conjugacy_classes(g)) {
    if (cls.front().is_identity())
      continue;
    std::vector<std::uint32_t> idx;
    for (auto const &e : cls)
      idx.push_back(static_cast<std::uint32_t>(*g.index_of(e)));
    classes.push_back(std::move(idx));
  }

  std::vector<char> mark(ig.size(), 0);
  std::set<std::vector<std::uint32_t>> visited;
  std::vector<IndexSubgroup> all{trivial_index_subgroup(ig)};
  visited.insert(sorted_key(all.front().elements));

  // Every normal subgroup is the join of the classes it contains, so
  // closing under "add one more class" from the trivial group finds them all.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const &cls : classes) {
      IndexSubgroup cur = all[i];
      for (auto c : cls) {
        auto ext = extend(ig, cur, c, ig.size(), mark);
        cur = std::move(*ext);
      }
      if (visited.insert(sorted_key(cur.elements)).second)
        all.push_back(std::move(cur));
    }
  }

  std::vector<PermGroup> res;
  for (auto const &s : all)
    res.push_back(to_perm_group(ig, s));
  std::sort(res.begin(), res.end(), [](PermGroup const &a, PermGroup const &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return res;
}

PermGroup core_pi(PermGroup const &g, PiSet const &pi)
{
  if (pi.covers(g.order()))
    return g;

  PermGroup best = PermGroup::trivial(g.degree());
  for (auto const &n : normal_subgroups(g)) {
    if (pi.covers(n.order()) && n.order() > best.order())
      best = n;
  }
  return best;
}

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<std::size_t> map)
: _source(std::move(source)), _target(std::move(target)), _map(std::move(map))
{
  if (_map.size() != _source.order())
    throw InvalidArgument("homomorphism table is not total");
  for (auto t : _map) {
    if (t >= _target.order())
      throw InvalidArgument("homomorphism table points outside the target");
  }
  auto const &pool = _source.generators().empty() ? _source.elements() : _source.generators();
  for (std::size_t i = 0; i < _source.order(); ++i) {
    for (auto const &s : pool) {
      auto j = *_source.index_of(s);
      auto ij = *_source.index_of(_source.element(i) * s);
      if (_target.element(_map[ij]) != _target.element(_map[i]) * _target.element(_map[j]))
        throw InvalidArgument("table is not a homomorphism");
    }
  }
}

Permutation const &GroupHom::operator()(Permutation const &g) const
{
  auto i = _source.index_of(g);
  if (!i)
    throw InvalidArgument("element outside the homomorphism source");
  return _target.element(_map[*i]);
}

PermGroup GroupHom::kernel() const
{
  std::vector<Permutation> elems;
  for (std::size_t i = 0; i < _map.size(); ++i) {
    if (_target.element(_map[i]).is_identity())
      elems.push_back(_source.element(i));
  }
  return PermGroup::from_elements(_source.degree(), {}, std::move(elems));
}

bool GroupHom::is_surjective() const
{
  std::vector<bool> hit(_target.order(), false);
  for (auto t : _map)
    hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Quotient quotient(PermGroup const &g, PermGroup const &n)
{
  if (!is_normal(g, n))
    throw InvalidArgument("quotient: subgroup is not normal");

  std::vector<std::uint32_t> coset_of(g.order(), 0);
  std::vector<bool> assigned(g.order(), false);
  std::vector<std::size_t> reps;

  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i])
      continue;
    auto label = static_cast<std::uint32_t>(reps.size() + 1u);
    reps.push_back(i);
    for (auto const &x : n.elements()) {
      auto j = *g.index_of(g.element(i) * x);
      assigned[j] = true;
      coset_of[j] = label;
    }
  }

  auto const k = static_cast<unsigned>(reps.size());
  auto image = [&](Permutation const &x) {
    std::vector<Point> imgs(k);
    for (unsigned c = 0; c < k; ++c)
      imgs[c] = coset_of[*g.index_of(x * g.element(reps[c]))];
    return Permutation(std::move(imgs));
  };

  std::vector<Permutation> gens;
  for (auto const &s : g.generators())
    gens.push_back(image(s));
  auto q = close(gens, k, g.order());

  std::vector<std::size_t> table(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    table[i] = *q.index_of(image(g.element(i)));

  GroupHom proj(g, q, std::move(table));
  return Quotient{std::move(q), std::move(proj)};
}

bool is_pi_separable(PermGroup const &g, PiSet const &pi)
{
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    auto o = core_pi(cur, pi);
    if (o.is_trivial())
      o = core_pi(cur, pi.complement_in(cur.order()));
    if (o.is_trivial())
      return false;
    cur = quotient(cur, o).group;
  }
  return true;
}

bool is_solvable(PermGroup const &g)
{
  for (auto p : prime_divisors(g.order())) {
    if (!is_pi_separable(g, PiSet{p}))
      return false;
  }
  return true;
}

FiniteAction::FiniteAction(PermGroup group, std::vector<std::string> labels,
                           std::vector<std::uint32_t> table)
: _group(std::move(group)), _labels(std::move(labels)), _table(std::move(table))
{
  auto const np = _labels.size();
  if (_table.size() != _group.order() * np)
    throw InvalidArgument("action table has the wrong size");
  for (auto x : _table) {
    if (x >= np)
      throw InvalidArgument("action table maps outside the point set");
  }
  for (std::uint32_t x = 0; x < np; ++x) {
    if (_table[x] != x)
      throw InvalidArgument("identity moves a point");
  }
  auto const &pool = _group.generators().empty() ? _group.elements() : _group.generators();
  for (std::size_t i = 0; i < _group.order(); ++i) {
    for (auto const &s : pool) {
      auto j = *_group.index_of(s);
      auto sj = *_group.index_of(s * _group.element(i));
      for (std::uint32_t x = 0; x < np; ++x) {
        if (_table[sj * np + x] != _table[j * np + _table[i * np + x]])
          throw InvalidArgument("table is not an action");
      }
    }
  }
}

std::size_t FiniteAction::index(Permutation const &g) const
{
  auto i = _group.index_of(g);
  if (!i)
    throw InvalidArgument("element " + g.to_string() + " outside the acting group");
  return *i;
}

std::uint32_t FiniteAction::act(Permutation const &g, std::uint32_t x) const
{
  if (x >= num_points())
    throw InvalidArgument("point outside the action");
  return _table[index(g) * num_points() + x];
}

std::uint64_t FiniteAction::fixed_points(Permutation const &g) const
{
  auto const base = index(g) * num_points();
  std::uint64_t res = 0;
  for (std::uint32_t x = 0; x < num_points(); ++x) {
    if (_table[base + x] == x)
      ++res;
  }
  return res;
}

std::vector<std::vector<std::uint32_t>> FiniteAction::orbits() const
{
  std::vector<std::vector<std::uint32_t>> res;
  std::vector<bool> seen(num_points(), false);
  for (std::uint32_t x = 0; x < num_points(); ++x) {
    if (seen[x])
      continue;
    std::vector<std::uint32_t> orbit;
    for (std::size_t i = 0; i < _group.order(); ++i) {
      auto y = _table[i * num_points() + x];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    res.push_back(std::move(orbit));
  }
  return res;
}

FiniteAction natural_action(PermGroup const &g)
{
  std::vector<std::string> labels;
  for (unsigned x = 1; x <= g.degree(); ++x)
    labels.push_back(std::to_string(x));
  std::vector<std::uint32_t> table;
  table.reserve(g.order() * g.degree());
  for (auto const &e : g.elements()) {
    for (Point x = 1; x <= g.degree(); ++x)
      table.push_back(e[x] - 1u);
  }
  return FiniteAction(g, std::move(labels), std::move(table));
}

FiniteAction conjugation_action(PermGroup const &g, std::vector<PermGroup> const &subgroups)
{
  std::vector<std::string> labels;
  for (auto const &s : subgroups)
    labels.push_back(s.to_string());

  std::vector<std::uint32_t> table;
  table.reserve(g.order() * subgroups.size());
  for (auto const &x : g.elements()) {
    auto xi = x.inverse();
    for (auto const &s : subgroups) {
      auto const &pool = s.generators().empty() ? s.elements() : s.generators();
      std::vector<Permutation> conj;
      for (auto const &y : pool)
        conj.push_back(x * y * xi);
      // The conjugate is the unique listed subgroup of the same order
      // containing the conjugated generators.
      std::optional<std::uint32_t> hit;
      for (std::uint32_t j = 0; j < subgroups.size() && !hit; ++j) {
        auto const &t = subgroups[j];
        if (t.order() != s.order())
          continue;
        bool ok = std::all_of(conj.begin(), conj.end(),
                              [&](Permutation const &c) { return t.contains(c); });
        if (ok)
          hit = j;
      }
      if (!hit)
        throw InvalidArgument("subgroup list is not closed under conjugation");
      table.push_back(*hit);
    }
  }
  return FiniteAction(g, std::move(labels), std::move(table));
}

FiniteAction conjugation_action(PermGroup const &g)
{
  std::vector<std::string> labels;
  for (auto const &e : g.elements())
    labels.push_back(e.to_string());

  std::vector<std::uint32_t> table;
  table.reserve(g.order() * g.order());
  for (auto const &x : g.elements()) {
    auto xi = x.inverse();
    for (auto const &y : g.elements())
      table.push_back(static_cast<std::uint32_t>(*g.index_of(x * y * xi)));
  }
  return FiniteAction(g, std::move(labels), std::move(table));
}

} // namespace hallfix
