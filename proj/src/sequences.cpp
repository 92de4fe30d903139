#include "lcmlab/sequences.hpp"

#include <string>

#include "lcmlab/error.hpp"

namespace lcmlab {

namespace {

void check_index(long k) {
  if (k < 0) throw Error(ErrorKind::NegativeIndex, "k = " + std::to_string(k));
}

}  // namespace

Integer ArithmeticProgression::term(long k) const {
  check_index(k);
  return u0 + r * k;
}

bool ArithmeticProgression::is_positive_coprime() const { return u0 >= 1 && r >= 1 && gcd(u0, r) == 1; }

void ArithmeticProgression::require_positive_coprime() const {
  if (u0 < 1) throw Error(ErrorKind::HypothesisViolated, "first term u0 must be positive, got " + u0.get_str());
  if (r < 1) throw Error(ErrorKind::HypothesisViolated, "difference r must be positive, got " + r.get_str());
  if (gcd(u0, r) != 1) {
    throw Error(ErrorKind::HypothesisViolated,
                "u0 and r must be coprime, gcd(" + u0.get_str() + ", " + r.get_str() + ") = " + gcd(u0, r).get_str());
  }
}

QuadraticSequence::QuadraticSequence(Integer a, Integer t, Integer b)
    : a_(std::move(a)), t_(std::move(t)), b_(std::move(b)) {
  if (a_ < 1) throw Error(ErrorKind::HypothesisViolated, "a must be >= 1, got " + a_.get_str());
  if (t_ < 0) throw Error(ErrorKind::HypothesisViolated, "t must be >= 0, got " + t_.get_str());
  if (gcd(a_, b_) != 1) {
    throw Error(ErrorKind::HypothesisViolated, "gcd(a, b) must be 1, got gcd(" + a_.get_str() + ", " + b_.get_str() + ")");
  }
}

Integer QuadraticSequence::term(long k) const {
  check_index(k);
  return a_ * k * (k + t_) + b_;
}

QuadraticSequence QuadraticSequence::shifted(long m) const {
  check_index(m);
  return QuadraticSequence(a_, 2 * m + t_, a_ * m * (m + t_) + b_);
}

SequenceWindow SequenceWindow::from_terms(std::vector<Integer> terms) {
  if (terms.empty()) throw Error(ErrorKind::BadRange, "empty window");
  detail::check_window_terms(terms, 0);
  SequenceWindow w;
  w.end_index = static_cast<long>(terms.size()) - 1;
  w.terms = std::move(terms);
  return w;
}

Integer SequenceWindow::product() const {
  Integer p = 1;
  for (const auto& x : terms) p *= x;
  return p;
}

namespace detail {

void check_window_range(long m, long n) {
  if (m < 0 || m > n) {
    throw Error(ErrorKind::BadRange, "window [" + std::to_string(m) + ", " + std::to_string(n) + "]");
  }
}

void check_window_terms(const std::vector<Integer>& terms, long m) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] == 0) {
      throw Error(ErrorKind::ZeroTerm, "term u_" + std::to_string(m + static_cast<long>(i)) + " is zero");
    }
  }
}

}  // namespace detail

Integer lcm_window(const SequenceWindow& w) { return lcm_list(w.terms); }

std::vector<Integer> difference_products(const SequenceWindow& w) {
  const auto& u = w.terms;
  std::vector<Integer> out;
  out.reserve(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    Integer p = 1;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i == j) continue;
      if (u[i] == u[j]) throw Error(ErrorKind::RepeatedTerm, "repeated term " + u[j].get_str());
      p *= u[i] - u[j];
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lcmlab
