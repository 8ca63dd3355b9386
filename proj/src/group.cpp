#include "sumsphere/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sumsphere/errors.hpp"

namespace sumsphere {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_integer(std::string_view token, const char* what) {
  token = trim(token);
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(what, std::string(token));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

void partitions(int remaining, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> orders) {
  if (orders.empty()) throw DomainError("a group needs at least one cyclic factor");
  auto data = std::make_shared<Data>();
  data->strides.assign(orders.size(), 1);
  for (std::size_t i = orders.size(); i-- > 0;) {
    if (orders[i] < 1) throw DomainError("cyclic factor orders must be >= 1");
    data->strides[i] = data->order;
    data->order *= orders[i];
    data->exponent = std::lcm(data->exponent, orders[i]);
  }
  data->orders = std::move(orders);
  data_ = std::move(data);
}

GroupSpec GroupSpec::parse(std::string_view literal) {
  std::vector<std::int64_t> orders;
  for (auto token : split(literal, 'x')) {
    token = trim(token);
    if (token.size() < 2 || (token.front() != 'Z' && token.front() != 'z')) {
      throw ParseError("expected a cyclic factor like Z25 in '" + std::string(literal) + "'",
                       std::string(token));
    }
    token.remove_prefix(1);
    if (!token.empty() && token.front() == '_') token.remove_prefix(1);
    const auto n = parse_integer(token, "bad cyclic factor order");
    if (n < 1) throw ParseError("cyclic factor order must be positive", std::string(token));
    orders.push_back(n);
  }
  return GroupSpec(std::move(orders));
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i > 0) out += 'x';
    out += 'Z';
    out += std::to_string(data_->orders[i]);
  }
  return out;
}

GroupElement GroupSpec::identity() const {
  return GroupElement(*this, std::vector<std::int64_t>(rank(), 0));
}

GroupElement GroupSpec::element(std::span<const std::int64_t> residues) const {
  if (residues.size() != rank()) {
    throw GroupMismatchError("element has " + std::to_string(residues.size()) +
                            " residues but " + to_string() + " has " +
                            std::to_string(rank()) + " factors");
  }
  std::vector<std::int64_t> reduced(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) reduced[i] = mod(residues[i], data_->orders[i]);
  return GroupElement(*this, std::move(reduced));
}

GroupElement GroupSpec::element(std::initializer_list<std::int64_t> residues) const {
  return element(std::span<const std::int64_t>(residues.begin(), residues.size()));
}

GroupElement GroupSpec::parse_element(std::string_view literal) const {
  std::string_view body = trim(literal);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::int64_t> residues;
  for (auto token : split(body, ',')) residues.push_back(parse_integer(token, "bad residue"));
  if (residues.size() != rank()) {
    throw ParseError("element arity does not match " + to_string(), std::string(literal));
  }
  return element(residues);
}

ElementIndex GroupSpec::encode(const GroupElement& g) const {
  if (!(g.group() == *this)) throw GroupMismatchError("element of " + g.group().to_string() +
                                                     " used with " + to_string());
  ElementIndex index = 0;
  for (std::size_t i = 0; i < rank(); ++i) index += g[i] * data_->strides[i];
  return index;
}

GroupElement GroupSpec::decode(ElementIndex index) const {
  if (index < 0 || index >= order()) throw DomainError("element index out of range");
  std::vector<std::int64_t> residues(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    residues[i] = (index / data_->strides[i]) % data_->orders[i];
  }
  return GroupElement(*this, std::move(residues));
}

ElementIndex GroupSpec::add_index(ElementIndex a, ElementIndex b) const noexcept {
  const auto& d = *data_;
  if (d.orders.size() == 1) {
    const auto s = a + b;
    return s >= d.order ? s - d.order : s;
  }
  ElementIndex out = 0;
  for (std::size_t i = 0; i < d.orders.size(); ++i) {
    const auto ra = (a / d.strides[i]) % d.orders[i];
    const auto rb = (b / d.strides[i]) % d.orders[i];
    auto r = ra + rb;
    if (r >= d.orders[i]) r -= d.orders[i];
    out += r * d.strides[i];
  }
  return out;
}

ElementIndex GroupSpec::negate_index(ElementIndex a) const noexcept {
  return scale_index(-1, a);
}

ElementIndex GroupSpec::scale_index(std::int64_t lambda, ElementIndex a) const noexcept {
  const auto& d = *data_;
  if (d.orders.size() == 1) return mod(mod(lambda, d.order) * a, d.order);
  ElementIndex out = 0;
  for (std::size_t i = 0; i < d.orders.size(); ++i) {
    const auto r = (a / d.strides[i]) % d.orders[i];
    out += mod(mod(lambda, d.orders[i]) * r, d.orders[i]) * d.strides[i];
  }
  return out;
}

bool GroupElement::is_identity() const noexcept {
  return std::all_of(residues_.begin(), residues_.end(), [](auto r) { return r == 0; });
}

std::string GroupElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(residues_[i]);
  }
  return out;
}

GroupElement add(const GroupElement& g, const GroupElement& h) {
  if (!(g.group() == h.group())) {
    throw GroupMismatchError("cannot add elements of " + g.group().to_string() + " and " +
                            h.group().to_string());
  }
  std::vector<std::int64_t> r(g.residues().begin(), g.residues().end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += h[i];
  return g.group().element(r);
}

GroupElement negate(const GroupElement& g) { return scalar_mul(-1, g); }

GroupElement scalar_mul(std::int64_t lambda, const GroupElement& g) {
  const auto orders = g.group().orders();
  std::vector<std::int64_t> r(g.residues().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = mod(mod(lambda, orders[i]) * g[i], orders[i]);
  }
  return g.group().element(r);
}

std::int64_t self_inverse_count(const GroupSpec& group) {
  // Each factor Z_n contributes gcd(2, n) solutions of 2x = 0.
  std::int64_t count = 1;
  for (auto n : group.orders()) count *= (n % 2 == 0) ? 2 : 1;
  return count;
}

std::vector<GroupElement> enumerate(const GroupSpec& group) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (ElementIndex i = 0; i < group.order(); ++i) out.push_back(group.decode(i));
  return out;
}

std::vector<std::int64_t> units(const GroupSpec& group) {
  if (!group.is_cyclic()) {
    throw UnsupportedError("units are only defined here for cyclic groups, got " +
                           group.to_string());
  }
  const auto n = group.order();
  std::vector<std::int64_t> out;
  for (std::int64_t c = 0; c < n; ++c) {
    if (std::gcd(c, n) == 1) out.push_back(c);  // c = 0 only for the trivial group
  }
  return out;
}

std::vector<GroupSpec> abelian_groups_of_order(std::int64_t n) {
  if (n < 1) throw DomainError("group order must be positive");
  if (n == 1) return {GroupSpec::cyclic(1)};

  const auto primes = factorize(n);
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : primes) {
    std::vector<int> current;
    std::vector<std::vector<int>> parts;
    partitions(e, e, current, parts);
    per_prime.push_back(std::move(parts));
  }

  std::vector<std::vector<std::int64_t>> factor_lists;
  std::vector<std::size_t> choice(primes.size(), 0);
  while (true) {
    std::size_t length = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      length = std::max(length, per_prime[i][choice[i]].size());
    }
    // Invariant factors: the k-th largest collects the k-th part of every prime's partition.
    std::vector<std::int64_t> factors(length, 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& part = per_prime[i][choice[i]];
      for (std::size_t k = 0; k < part.size(); ++k) {
        for (int j = 0; j < part[k]; ++j) factors[k] *= primes[i].first;
      }
    }
    std::reverse(factors.begin(), factors.end());
    factor_lists.push_back(std::move(factors));

    std::size_t i = 0;
    while (i < primes.size() && ++choice[i] == per_prime[i].size()) choice[i++] = 0;
    if (i == primes.size()) break;
  }

  std::sort(factor_lists.begin(), factor_lists.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<GroupSpec> out;
  for (auto& f : factor_lists) out.emplace_back(std::move(f));
  return out;
}

}  // namespace sumsphere
