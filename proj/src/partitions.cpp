#include "molien/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "molien/errors.hpp"

namespace molien {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("partition must have a part");
  std::sort(parts_.begin(), parts_.end());
  if (parts_.front() <= 0)
    throw ValidationError("partition parts must be positive");
  for (int p : parts_) n_ += p;
}

Partition Partition::from_multiplicities(const std::vector<int>& theta) {
  std::vector<int> parts;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] < 0) throw ValidationError("negative multiplicity");
    parts.insert(parts.end(), theta[i], static_cast<int>(i + 1));
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> theta(n_, 0);
  for (int p : parts_) ++theta[p - 1];
  return theta;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out << ',';
    out << parts_[j];
  }
  out << ')';
  return out.str();
}

namespace {

void extend(int remaining, int min_part, std::vector<int>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    // a part p must leave either nothing or at least p behind
    if (remaining - p != 0 && remaining - p < p) continue;
    prefix.push_back(p);
    extend(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n <= 0) throw ValidationError("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, 1, prefix, out);
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class class_size(const Partition& alpha) {
  mpz_class divisor = 1;
  const auto theta = alpha.multiplicities();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), i + 1, theta[i]);
    divisor *= power * factorial(theta[i]);
  }
  return factorial(alpha.n()) / divisor;
}

}  // namespace molien
