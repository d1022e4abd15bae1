#include "molien/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "molien/partitions.hpp"

namespace molien {

namespace {

int reduce(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

// N^m, or CapacityError once it passes the cap.
std::uint64_t checked_power(int modulus, std::size_t dim, std::uint64_t cap,
                            const char* what) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > cap / static_cast<std::uint64_t>(modulus)) {
      std::ostringstream msg;
      msg << what << ": " << modulus << "^" << dim
          << " candidates exceed the enumeration cap " << cap;
      throw CapacityError(msg.str());
    }
    total *= static_cast<std::uint64_t>(modulus);
  }
  return total;
}

std::uint64_t encode(const std::vector<int>& residues, int modulus) {
  std::uint64_t code = 0;
  for (int r : residues) code = code * modulus + static_cast<std::uint64_t>(r);
  return code;
}

std::vector<int> decode(std::uint64_t code, int modulus, std::size_t dim) {
  std::vector<int> residues(dim);
  for (std::size_t i = dim; i-- > 0;) {
    residues[i] = static_cast<int>(code % modulus);
    code /= modulus;
  }
  return residues;
}

void check_vector(const ZModVec& v, int modulus, std::size_t dim) {
  if (v.modulus() != modulus || v.size() != dim) {
    std::ostringstream msg;
    msg << "vector " << v.to_string() << " (mod " << v.modulus()
        << ") does not live in (Z/" << modulus << "Z)^" << dim;
    throw ValidationError(msg.str());
  }
}

// Adds <g> to the closed set `span` in place.
void close_under(std::unordered_set<std::uint64_t>& span, const ZModVec& g,
                 int modulus, std::size_t dim) {
  const std::vector<std::uint64_t> base(span.begin(), span.end());
  ZModVec multiple = g;
  const ZModVec zero = ZModVec::zero(modulus, dim);
  while (multiple != zero) {
    for (std::uint64_t code : base) {
      ZModVec sum = ZModVec(modulus, decode(code, modulus, dim)) + multiple;
      span.insert(encode(sum.components(), modulus));
    }
    multiple = multiple + g;
  }
}

}  // namespace

struct SubgroupAccess {
  static ZModSubgroup make(int modulus, std::size_t dim,
                           std::vector<ZModVec> generators,
                           std::unordered_set<std::uint64_t> codes) {
    ZModSubgroup h;
    h.modulus_ = modulus;
    h.dim_ = dim;
    h.generators_ = std::move(generators);
    std::vector<std::uint64_t> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    h.elements_.reserve(sorted.size());
    for (std::uint64_t c : sorted)
      h.elements_.emplace_back(modulus, decode(c, modulus, dim));
    h.codes_ = std::move(codes);
    return h;
  }

  // Closed element set -> subgroup with a greedily chosen generating set.
  static ZModSubgroup from_closed_set(int modulus, std::size_t dim,
                                     std::unordered_set<std::uint64_t> codes) {
    std::vector<std::uint64_t> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<ZModVec> generators;
    std::unordered_set<std::uint64_t> span{
        encode(std::vector<int>(dim, 0), modulus)};
    for (std::uint64_t c : sorted) {
      if (span.contains(c)) continue;
      ZModVec g(modulus, decode(c, modulus, dim));
      close_under(span, g, modulus, dim);
      generators.push_back(std::move(g));
    }
    return make(modulus, dim, std::move(generators), std::move(codes));
  }
};

ZModVec::ZModVec(int modulus, std::vector<int> components)
    : modulus_(modulus), components_(std::move(components)) {
  if (modulus_ < 2) throw ValidationError("modulus must be at least 2");
  if (components_.empty())
    throw ValidationError("vectors need at least one component");
  for (int& c : components_) c = reduce(c, modulus_);
}

ZModVec ZModVec::zero(int modulus, std::size_t dim) {
  return ZModVec(modulus, std::vector<int>(dim, 0));
}

ZModVec ZModVec::operator+(const ZModVec& other) const {
  std::vector<int> sum(components_);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.components_[i];
  return ZModVec(modulus_, std::move(sum));
}

ZModVec ZModVec::operator-() const { return scaled(-1); }

ZModVec ZModVec::scaled(int factor) const {
  std::vector<int> out(components_);
  for (int& c : out) c = reduce(static_cast<long long>(c) * factor, modulus_);
  return ZModVec(modulus_, std::move(out));
}

int ZModVec::dot(const ZModVec& other) const {
  long long acc = 0;
  for (std::size_t i = 0; i < components_.size(); ++i)
    acc += static_cast<long long>(components_[i]) * other.components_[i];
  return reduce(acc, modulus_);
}

std::string ZModVec::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out << ',';
    out << components_[i];
  }
  out << ')';
  return out.str();
}

bool ZModSubgroup::contains(const ZModVec& v) const {
  return v.modulus() == modulus_ && v.size() == dim_ &&
         codes_.contains(encode(v.components(), modulus_));
}

bool ZModSubgroup::contains(const std::vector<int>& residues) const {
  if (residues.size() != dim_) return false;
  std::uint64_t code = 0;
  for (int r : residues)
    code = code * modulus_ + static_cast<std::uint64_t>(reduce(r, modulus_));
  return codes_.contains(code);
}

bool ZModSubgroup::is_subgroup_of(const ZModSubgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const ZModVec& v) { return other.contains(v); });
}

ZModSubgroup enumerate_subgroup(int modulus, std::size_t dim,
                                const std::vector<ZModVec>& generators,
                                const Limits& limits) {
  if (modulus < 2) throw ValidationError("modulus must be at least 2");
  if (dim < 1) throw ValidationError("dimension must be at least 1");
  checked_power(modulus, dim, limits.enumeration_cap, "enumerate_subgroup");
  for (const auto& g : generators) check_vector(g, modulus, dim);

  std::unordered_set<std::uint64_t> span{
      encode(std::vector<int>(dim, 0), modulus)};
  for (const auto& g : generators) {
    if (span.contains(encode(g.components(), modulus))) continue;
    close_under(span, g, modulus, dim);
  }
  return SubgroupAccess::make(modulus, dim, generators, std::move(span));
}

bool is_sn_stable(const ZModSubgroup& h) {
  for (const auto& v : h.elements()) {
    std::vector<int> swapped = v.components();
    for (std::size_t i = 0; i + 1 < swapped.size(); ++i) {
      std::swap(swapped[i], swapped[i + 1]);
      if (!h.contains(swapped)) return false;
      std::swap(swapped[i], swapped[i + 1]);
    }
  }
  return true;
}

ZModSubgroup orthogonal(const ZModSubgroup& h, const Limits& limits) {
  const int modulus = h.modulus();
  const std::size_t dim = h.dim();
  const std::uint64_t total =
      checked_power(modulus, dim, limits.enumeration_cap, "orthogonal");

  std::unordered_set<std::uint64_t> codes;
  for (std::uint64_t c = 0; c < total; ++c) {
    const std::vector<int> residues = decode(c, modulus, dim);
    bool orthogonal_to_all = true;
    for (const auto& g : h.generators()) {
      long long acc = 0;
      for (std::size_t i = 0; i < dim; ++i)
        acc += static_cast<long long>(residues[i]) * g[i];
      if (acc % modulus != 0) {
        orthogonal_to_all = false;
        break;
      }
    }
    if (orthogonal_to_all) codes.insert(c);
  }
  return SubgroupAccess::from_closed_set(modulus, dim, std::move(codes));
}

ZModSubgroup orthogonal_alpha(const ZModSubgroup& hperp, const Partition& alpha,
                              const Limits& limits) {
  if (static_cast<std::size_t>(alpha.n()) != hperp.dim()) {
    std::ostringstream msg;
    msg << "partition " << alpha.to_string() << " does not partition "
        << hperp.dim();
    throw ValidationError(msg.str());
  }
  const int modulus = hperp.modulus();
  const auto l = static_cast<std::size_t>(alpha.length());
  const std::uint64_t total =
      checked_power(modulus, l, limits.enumeration_cap, "orthogonal_alpha");

  std::unordered_set<std::uint64_t> codes;
  std::vector<int> expanded(hperp.dim());
  for (std::uint64_t c = 0; c < total; ++c) {
    const std::vector<int> residues = decode(c, modulus, l);
    auto out = expanded.begin();
    for (std::size_t j = 0; j < l; ++j)
      out = std::fill_n(out, alpha.part(static_cast<int>(j)), residues[j]);
    if (hperp.contains(expanded)) codes.insert(c);
  }
  return SubgroupAccess::from_closed_set(modulus, l, std::move(codes));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::symmetric: return "symmetric";
    case Family::hyperoctahedral: return "hyperoctahedral";
    case Family::demihyperoctahedral: return "demihyperoctahedral";
    case Family::dihedral: return "dihedral";
    case Family::g_de_e_n: return "g-de-e-n";
    case Family::custom: return "custom";
  }
  return "custom";
}

namespace {

ZModVec unit(int modulus, int n, int i, int value = 1) {
  std::vector<int> v(n, 0);
  v[i] = value;
  return ZModVec(modulus, std::move(v));
}

GroupSpec finish(int modulus, int n, std::vector<ZModVec> generators,
                 Family family, std::string label, const Limits& limits) {
  GroupSpec spec;
  spec.modulus = modulus;
  spec.n = n;
  spec.h = enumerate_subgroup(modulus, n, generators, limits);
  if (!is_sn_stable(spec.h))
    throw ValidationError("H is not stable under permutation of coordinates");
  spec.family = family;
  spec.label = std::move(label);
  spec.order_h = static_cast<unsigned long>(spec.h.order());
  spec.order_g = spec.order_h * factorial(n);
  return spec;
}

void require_n(int n) {
  if (n < 1) throw ValidationError("n must be at least 1");
}

}  // namespace

namespace families {

GroupSpec symmetric(int n, const Limits& limits) {
  require_n(n);
  return finish(2, n, {}, Family::symmetric, "S_" + std::to_string(n), limits);
}

GroupSpec hyperoctahedral(int n, const Limits& limits) {
  require_n(n);
  std::vector<ZModVec> gens;
  for (int i = 0; i < n; ++i) gens.push_back(unit(2, n, i));
  return finish(2, n, std::move(gens), Family::hyperoctahedral,
                "B_" + std::to_string(n), limits);
}

GroupSpec demihyperoctahedral(int n, const Limits& limits) {
  require_n(n);
  std::vector<ZModVec> gens;
  for (int i = 1; i < n; ++i) gens.push_back(unit(2, n, 0) + unit(2, n, i));
  return finish(2, n, std::move(gens), Family::demihyperoctahedral,
                "D_" + std::to_string(n), limits);
}

GroupSpec dihedral(int modulus, const Limits& limits) {
  if (modulus < 2) throw ValidationError("dihedral family needs N >= 2");
  std::vector<ZModVec> gens{ZModVec(modulus, {1, -1})};
  return finish(modulus, 2, std::move(gens), Family::dihedral,
                "I_2(" + std::to_string(modulus) + ")", limits);
}

GroupSpec g_de_e_n(int d, int e, int n, const Limits& limits) {
  require_n(n);
  if (d < 1 || e < 1)
    throw ValidationError("G(de,e,n) needs d >= 1 and e >= 1");
  const int modulus = d * e;
  if (modulus < 2) throw ValidationError("G(de,e,n) needs N = de >= 2");
  // sum of coordinates divisible by e
  std::vector<ZModVec> gens{unit(modulus, n, 0, e)};
  for (int i = 1; i < n; ++i)
    gens.push_back(unit(modulus, n, 0) + unit(modulus, n, i, -1));
  std::ostringstream label;
  label << "G(" << modulus << ',' << e << ',' << n << ')';
  return finish(modulus, n, std::move(gens), Family::g_de_e_n, label.str(),
                limits);
}

GroupSpec g2_example(const Limits& limits) {
  return finish(2, 3, {ZModVec(2, {1, 1, 1})}, Family::custom, "g2-example",
                limits);
}

GroupSpec custom(int modulus, int n,
                 const std::vector<std::vector<int>>& generators,
                 const Limits& limits) {
  require_n(n);
  if (modulus < 2) throw ValidationError("modulus must be at least 2");
  std::vector<ZModVec> gens;
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(n))
      throw ValidationError("generator length does not match n");
    for (int r : g)
      if (r < 0 || r >= modulus)
        throw ValidationError("generator residue out of range [0, N-1]");
    gens.emplace_back(modulus, g);
  }
  return finish(modulus, n, std::move(gens), Family::custom, "custom", limits);
}

}  // namespace families

GroupSpec family_subgroup(const FamilyRequest& request, const Limits& limits) {
  using Kind = FamilyRequest::Kind;
  switch (request.kind) {
    case Kind::symmetric: return families::symmetric(request.n, limits);
    case Kind::hyperoctahedral:
      return families::hyperoctahedral(request.n, limits);
    case Kind::demihyperoctahedral:
      return families::demihyperoctahedral(request.n, limits);
    case Kind::dihedral: return families::dihedral(request.modulus, limits);
    case Kind::g_de_e_n:
      return families::g_de_e_n(request.d, request.e, request.n, limits);
    case Kind::g2_example: return families::g2_example(limits);
    case Kind::custom:
      return families::custom(request.modulus, request.n, request.generators,
                              limits);
  }
  throw ValidationError("unknown family");
}

}  // namespace molien
