#include "molien/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "molien/errors.hpp"

namespace molien {

namespace {

void compositions(std::uint32_t total, std::size_t parts,
                  std::vector<std::uint32_t>& prefix,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint32_t first = 0; first <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, parts, prefix, out);
    prefix.pop_back();
  }
}

// Weak compositions of `total` into `parts` non-negative integers.
std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t total,
                                                     std::size_t parts) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> prefix;
  compositions(total, parts, prefix, out);
  return out;
}

class MonomialCounter {
 public:
  MonomialCounter(const GroupSpec& spec, int k, const Limits& limits)
      : spec_(spec), k_(static_cast<std::size_t>(k)) {
    std::uint64_t codes = 1;
    for (int j = 0; j < spec.n; ++j) {
      if (codes > limits.enumeration_cap / spec.modulus)
        throw CapacityError("oracle: N^n residue table exceeds the cap");
      codes *= spec.modulus;
    }
    invariant_.assign(codes, -1);
  }

  // H fixes the monomial iff sum_j h_j c_j = 0 mod N for every h in H,
  // c_j the column sums.
  bool invariant(const std::vector<std::uint64_t>& column_sums) {
    std::uint64_t code = 0;
    for (auto c : column_sums) code = code * spec_.modulus + c % spec_.modulus;
    auto& cached = invariant_[code];
    if (cached < 0) {
      cached = 1;
      for (const auto& h : spec_.h.elements()) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < column_sums.size(); ++j)
          acc += static_cast<std::uint64_t>(h[j]) * (column_sums[j] % spec_.modulus);
        if (acc % spec_.modulus != 0) {
          cached = 0;
          break;
        }
      }
    }
    return cached == 1;
  }

  std::uint64_t count(const std::vector<std::vector<std::vector<std::uint32_t>>>& rows) {
    orbits_.clear();
    matrix_.assign(k_, nullptr);
    descend(rows, 0);
    return orbits_.size();
  }

 private:
  void descend(const std::vector<std::vector<std::vector<std::uint32_t>>>& rows,
               std::size_t row) {
    if (row == k_) {
      const auto n = static_cast<std::size_t>(spec_.n);
      std::vector<std::uint64_t> sums(n, 0);
      for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < n; ++j) sums[j] += (*matrix_[i])[j];
      if (!invariant(sums)) return;
      std::vector<std::vector<std::uint32_t>> columns(
          n, std::vector<std::uint32_t>(k_));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < k_; ++i) columns[j][i] = (*matrix_[i])[j];
      std::sort(columns.begin(), columns.end());
      orbits_.insert(std::move(columns));
      return;
    }
    for (const auto& r : rows[row]) {
      matrix_[row] = &r;
      descend(rows, row + 1);
    }
  }

  const GroupSpec& spec_;
  std::size_t k_;
  std::vector<signed char> invariant_;
  std::vector<const std::vector<std::uint32_t>*> matrix_;
  std::set<std::vector<std::vector<std::uint32_t>>> orbits_;
};

std::uint64_t dimension(MonomialCounter& counter, const GroupSpec& spec, int k,
                        const std::vector<std::uint32_t>& multidegree,
                        const Limits& limits) {
  if (multidegree.size() != static_cast<std::size_t>(k))
    throw ValidationError("multidegree length must equal k");
  std::vector<std::vector<std::vector<std::uint32_t>>> rows;
  std::uint64_t matrices = 1;
  for (auto d : multidegree) {
    rows.push_back(compositions(d, static_cast<std::size_t>(spec.n)));
    if (matrices > limits.oracle_cap / rows.back().size()) {
      std::ostringstream msg;
      msg << "oracle: more than " << limits.oracle_cap
          << " exponent matrices for one multidegree";
      throw CapacityError(msg.str());
    }
    matrices *= rows.back().size();
  }
  return counter.count(rows);
}

}  // namespace

std::uint64_t invariant_dimension(const GroupSpec& spec, int k,
                                  const std::vector<std::uint32_t>& multidegree,
                                  const Limits& limits) {
  if (k < 1) throw ValidationError("k must be at least 1");
  MonomialCounter counter(spec, k, limits);
  return dimension(counter, spec, k, multidegree, limits);
}

MultiPoly oracle_series(const GroupSpec& spec, int k, std::uint32_t depth,
                        const Limits& limits) {
  if (k < 1) throw ValidationError("k must be at least 1");
  const auto nvars = static_cast<std::size_t>(k);
  MonomialCounter counter(spec, k, limits);
  std::vector<Term> terms;
  std::vector<std::uint32_t> degree(nvars, 0);
  while (true) {
    const auto dim = dimension(counter, spec, k, degree, limits);
    if (dim != 0)
      terms.push_back(Term{degree, Rational(static_cast<unsigned long>(dim))});
    std::size_t i = 0;
    while (i < nvars && degree[i] == depth) degree[i++] = 0;
    if (i == nvars) break;
    ++degree[i];
  }
  return MultiPoly::from_terms(nvars, std::move(terms));
}

}  // namespace molien
