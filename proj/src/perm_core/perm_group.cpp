#include "picc/perm_group.hpp"

#include <mutex>

#include "picc/errors.hpp"

namespace picc {

namespace {

bool fixes_all(const Permutation& p, const std::vector<BsgsLevel>& levels,
               std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (p(levels[i].base_point) != levels[i].base_point) return false;
  return true;
}

BsgsLevel make_level(std::size_t degree, Point base_point) {
  BsgsLevel level;
  level.base_point = base_point;
  level.slot.assign(degree, -1);
  level.orbit.push_back(base_point);
  level.slot[base_point] = 0;
  level.transversal.emplace_back(degree);
  level.transversal_inverse.emplace_back(degree);
  return level;
}

}  // namespace

void Bsgs::extend_orbit(BsgsLevel& level) const {
  // Existing transversal entries are never replaced, so sift paths of
  // elements that already stripped to the identity stay valid.
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const Point beta = level.orbit[i];
    for (const auto& s : level.generators) {
      const Point gamma = s(beta);
      if (level.slot[gamma] >= 0) continue;
      level.slot[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      Permutation u = s * level.transversal[i];
      level.transversal_inverse.push_back(inverse(u));
      level.transversal.push_back(std::move(u));
    }
  }
}

Bsgs::Bsgs(std::size_t degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  std::vector<Permutation> strong;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
    if (!g.is_identity()) strong.push_back(g);
  }
  for (const auto& g : strong) {
    if (fixes_all(g, levels_, levels_.size()))
      levels_.push_back(make_level(degree, g.first_moved_point()));
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : strong)
      if (fixes_all(g, levels_, l)) levels_[l].generators.push_back(g);
    extend_orbit(levels_[l]);
  }

  // tested[l][i]: number of level-l generators already paired with orbit
  // point i and confirmed to produce Schreier generators that sift.
  std::vector<std::vector<std::size_t>> tested(levels_.size());
  auto ensure_tested = [&](std::size_t l) {
    if (tested.size() <= l) tested.resize(l + 1);
    tested[l].resize(levels_[l].orbit.size(), 0);
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    ensure_tested(li);
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restarted;
         ++oi) {
      while (tested[li][oi] < levels_[li].generators.size()) {
        const BsgsLevel& level = levels_[li];
        const Permutation& s = level.generators[tested[li][oi]];
        ++tested[li][oi];
        const Point beta = level.orbit[oi];
        const Point gamma = s(beta);
        Permutation schreier = level.transversal_inverse[level.slot[gamma]] *
                               s * level.transversal[oi];
        auto [residue, stop] = sift(std::move(schreier), li + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size())
          levels_.push_back(make_level(degree_, residue.first_moved_point()));
        for (std::size_t l = li + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          extend_orbit(levels_[l]);
          ensure_tested(l);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

std::vector<Permutation> Bsgs::strong_generators() const {
  if (levels_.empty()) return {};
  return levels_.front().generators;
}

BigInt Bsgs::order() const {
  BigInt n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

std::pair<Permutation, std::size_t> Bsgs::sift(Permutation p,
                                               std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const BsgsLevel& level = levels_[l];
    const std::int32_t slot = level.slot[p(level.base_point)];
    if (slot < 0) return {std::move(p), l};
    p = level.transversal_inverse[slot] * p;
  }
  return {std::move(p), levels_.size()};
}

bool Bsgs::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw DegreeMismatch(p.degree(), degree_);
  auto [residue, stop] = sift(p);
  return stop == levels_.size() && residue.is_identity();
}

ElementIterator::ElementIterator(std::shared_ptr<const Bsgs> bsgs)
    : bsgs_(std::move(bsgs)), index_(bsgs_->levels().size(), 0) {
  prefix_.resize(index_.size());
  rebuild_prefix(0);
}

void ElementIterator::rebuild_prefix(std::size_t from) {
  const auto& levels = bsgs_->levels();
  for (std::size_t l = from; l < levels.size(); ++l) {
    const Permutation& u = levels[l].transversal[index_[l]];
    prefix_[l] = l == 0 ? u : prefix_[l - 1] * u;
  }
}

std::optional<Permutation> ElementIterator::next() {
  if (done_) return std::nullopt;
  const auto& levels = bsgs_->levels();
  Permutation current =
      prefix_.empty() ? Permutation(bsgs_->degree()) : prefix_.back();
  // advance the odometer
  std::size_t l = levels.size();
  while (l > 0) {
    --l;
    if (++index_[l] < levels[l].orbit.size()) {
      rebuild_prefix(l);
      return current;
    }
    index_[l] = 0;
  }
  done_ = true;
  return current;
}

struct PermGroup::State {
  std::size_t degree;
  std::vector<Permutation> generators;
  std::once_flag once;
  std::shared_ptr<const Bsgs> bsgs;
  BigInt order;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : state_(std::make_shared<State>()) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
  if (generators.empty()) generators.emplace_back(degree);
  state_->degree = degree;
  state_->generators = std::move(generators);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::size_t PermGroup::degree() const { return state_->degree; }

const std::vector<Permutation>& PermGroup::generators() const {
  return state_->generators;
}

std::shared_ptr<const Bsgs> PermGroup::bsgs_ptr() const {
  std::call_once(state_->once, [this] {
    auto b = std::make_shared<const Bsgs>(state_->degree, state_->generators);
    state_->order = b->order();
    state_->bsgs = std::move(b);
  });
  return state_->bsgs;
}

const Bsgs& PermGroup::bsgs() const { return *bsgs_ptr(); }

const BigInt& PermGroup::order() const {
  bsgs_ptr();
  return state_->order;
}

bool PermGroup::contains(const Permutation& p) const {
  return bsgs().contains(p);
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  const auto& levels = bsgs().levels();
  Permutation g(degree());
  for (const auto& level : levels) {
    std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
    g = g * level.transversal[pick(rng)];
  }
  return g;
}

ElementIterator PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw ResourceLimit("element enumeration cap",
                        "|G| = " + order().str() + " > " + std::to_string(cap));
  return ElementIterator(bsgs_ptr());
}

std::vector<Permutation> enumerate_elements(const PermGroup& g,
                                            std::uint64_t cap) {
  auto it = g.elements(cap);
  std::vector<Permutation> out;
  out.reserve(to_u64(g.order()));
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace picc
