#include "lucasbinom/sequences.hpp"

#include "lucasbinom/errors.hpp"

namespace lucasbinom {

SequenceHandle::SequenceHandle(RecurrenceParams params) : params_(std::move(params)) {
  if (params_.t.is_zero()) {
    throw DegenerateRecurrence("t = 0 reduces the recurrence to first order");
  }
  cache_.push_back(params_.a);
  cache_.push_back(params_.b);
}

SequenceHandle::SequenceHandle(const SequenceHandle& other) : params_(other.params_) {
  std::lock_guard lock(other.mutex_);
  cache_ = other.cache_;
}

SequenceHandle& SequenceHandle::operator=(const SequenceHandle& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_, other.mutex_);
  params_ = other.params_;
  cache_ = other.cache_;
  return *this;
}

void SequenceHandle::extend_locked(std::size_t n) const {
  cache_.reserve(n + 1);
  while (cache_.size() <= n) {
    const std::size_t k = cache_.size();
    cache_.push_back(params_.s * cache_[k - 1] + params_.t * cache_[k - 2]);
  }
}

RingElement SequenceHandle::term(std::size_t n) const {
  std::lock_guard lock(mutex_);
  extend_locked(n);
  return cache_[n];
}

std::vector<RingElement> SequenceHandle::terms(std::size_t n) const {
  std::lock_guard lock(mutex_);
  extend_locked(n);
  return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(n) + 1};
}

SequenceHandle lucas_u(const RingElement& s, const RingElement& t) {
  return SequenceHandle({s, t, RingElement(0), RingElement(1)});
}

SequenceHandle lucas_v(const RingElement& s, const RingElement& t) {
  return SequenceHandle({s, t, RingElement(2), s});
}

RingElement binet_term(const BinetParams& bp, std::size_t n) {
  if (bp.p == bp.q) throw InvalidRoots("roots must be distinct");
  if (bp.p.is_zero() || bp.q.is_zero()) throw InvalidRoots("roots must be nonzero");
  if (bp.A.is_zero() && bp.B.is_zero()) throw InvalidRoots("A and B cannot both vanish");
  const auto e = static_cast<unsigned>(n);
  return bp.A * bp.p.pow(e) + bp.B * bp.q.pow(e);
}

// (p - q)^2 = (p + q)^2 - 4pq = s^2 + 4t, i.e. P^2 - 4Q with P = s, Q = -t.
RingElement discriminant(const RingElement& s, const RingElement& t) { return s * s + RingElement(4) * t; }

bool has_repeated_root(const RingElement& s, const RingElement& t) { return discriminant(s, t).is_zero(); }

}  // namespace lucasbinom
