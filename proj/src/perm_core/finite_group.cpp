#include "picc/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "picc/errors.hpp"
#include "picc/kernels.hpp"

namespace picc {

FiniteGroup::FiniteGroup(PermGroup g, const Limits& limits)
    : group_(std::move(g)), limits_(limits) {}

GroupPtr FiniteGroup::create(const PermGroup& g, const Limits& limits) {
  std::shared_ptr<FiniteGroup> fg(new FiniteGroup(g, limits));
  fg->elements_ = enumerate_elements(g, limits.element_cap);
  const std::size_t n = fg->elements_.size();
  fg->index_.reserve(n * 2);
  for (ElementId i = 0; i < n; ++i) fg->index_.emplace(fg->elements_[i], i);

  for (const auto& gen : g.generators())
    if (!gen.is_identity()) fg->generators_.push_back(fg->index_of(gen));

  fg->inverse_.resize(n);
  fg->order_.resize(n);
  for (ElementId i = 0; i < n; ++i) {
    fg->inverse_[i] = fg->index_of(picc::inverse(fg->elements_[i]));
    fg->order_[i] =
        static_cast<std::uint32_t>(element_order_u64(fg->elements_[i]));
  }

  std::vector<ElementId> by_lex(n);
  std::iota(by_lex.begin(), by_lex.end(), ElementId{0});
  std::sort(by_lex.begin(), by_lex.end(), [&](ElementId a, ElementId b) {
    return fg->elements_[a] < fg->elements_[b];
  });
  fg->lex_rank_.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) fg->lex_rank_[by_lex[r]] = r;

  if (n <= limits.cayley_table_cap) fg->build_cayley_table();
  return fg;
}

void FiniteGroup::build_cayley_table() {
  const std::size_t n = elements_.size();
  // Right multiplication by each generator, by hashing.
  std::vector<std::vector<ElementId>> gen_cols;
  for (ElementId s : generators_) {
    std::vector<ElementId> col(n);
    for (ElementId a = 0; a < n; ++a)
      col[a] = index_of(elements_[a] * elements_[s]);
    gen_cols.push_back(std::move(col));
  }
  // Breadth-first spanning tree of the Cayley graph: e = parent[e] * gen.
  constexpr ElementId unset = ~ElementId{0};
  std::vector<ElementId> parent(n, unset), via(n, unset), bfs{identity};
  parent[identity] = identity;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const ElementId e = bfs[head];
    for (std::size_t k = 0; k < gen_cols.size(); ++k) {
      const ElementId f = gen_cols[k][e];
      if (parent[f] != unset) continue;
      parent[f] = e;
      via[f] = static_cast<ElementId>(k);
      bfs.push_back(f);
    }
  }
  table_.resize(n * n);
  std::iota(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n),
            ElementId{0});
  const auto& k = kernels::active();
  for (std::size_t head = 1; head < bfs.size(); ++head) {
    const ElementId e = bfs[head];
    // a * e = (a * parent) * s
    k.gather(gen_cols[via[e]].data(), table_.data() + parent[e] * n,
             table_.data() + e * n, n);
  }
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree()) throw DegreeMismatch(p.degree(), degree());
  auto id = find(p);
  if (!id) throw NotMember(p.to_cycle_string() + " is not in the group");
  return *id;
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[std::size_t{b} * elements_.size() + a];
  return index_of(elements_[a] * elements_[b]);
}

ElementId FiniteGroup::conj(ElementId x, ElementId g) const {
  return mul(mul(inverse_[g], x), g);
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const {
  return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
}

ElementId FiniteGroup::power(ElementId x, std::int64_t k) const {
  return index_of(picc::power(elements_[x], k));
}

Subgroup::Subgroup(GroupPtr g, ElementSet members, std::vector<ElementId> gens)
    : group_(std::move(g)),
      members_(std::move(members)),
      gens_(std::move(gens)),
      order_(members_.count()) {}

Subgroup Subgroup::trivial(GroupPtr g) {
  ElementSet m(g->size());
  m.set(FiniteGroup::identity);
  return Subgroup(std::move(g), std::move(m), {});
}

Subgroup Subgroup::whole(GroupPtr g) {
  std::vector<ElementId> gens(g->generators().begin(), g->generators().end());
  return generated(std::move(g), gens);
}

void Subgroup::absorb(ElementId x) {
  if (members_.test(x)) return;
  gens_.push_back(x);
  // Old members times old generators are already inside; walking every
  // member against every generator finds all new products.
  std::vector<ElementId> queue = members_.to_vector();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementId a = queue[head];
    for (ElementId s : gens_) {
      const ElementId b = group_->mul(a, s);
      if (!members_.test(b)) {
        members_.set(b);
        queue.push_back(b);
      }
    }
  }
  order_ = queue.size();
}

Subgroup Subgroup::generated(GroupPtr g, std::span<const ElementId> gens) {
  Subgroup h = trivial(std::move(g));
  for (ElementId x : gens) h.absorb(x);
  return h;
}

Subgroup Subgroup::generated(GroupPtr g, const std::vector<Permutation>& gens) {
  std::vector<ElementId> ids;
  for (const auto& p : gens) ids.push_back(g->index_of(p));
  return generated(std::move(g), ids);
}

Subgroup Subgroup::from_members(GroupPtr g, ElementSet members) {
  if (members.universe() != g->size())
    throw InvalidArgument("member set over a different group");
  Subgroup h = trivial(g);
  members.for_each([&](ElementId x) { h.absorb(x); });
  if (!(h.members_ == members))
    throw InvalidArgument("element set is not a subgroup");
  return h;
}

Subgroup Subgroup::with_generator(ElementId x) const {
  Subgroup h = *this;
  h.absorb(x);
  return h;
}

bool Subgroup::contains(const Permutation& p) const {
  auto id = group_->find(p);
  return id && members_.test(*id);
}

std::vector<Permutation> Subgroup::generator_permutations() const {
  std::vector<Permutation> out;
  for (ElementId x : gens_) out.push_back(group_->element(x));
  return out;
}

PermGroup Subgroup::as_perm_group() const {
  return PermGroup(group_->degree(), generator_permutations());
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (group_->mul(gens_[i], gens_[j]) != group_->mul(gens_[j], gens_[i]))
        return false;
  return true;
}

}  // namespace picc
