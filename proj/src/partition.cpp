#include "fsmaps/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "fsmaps/error.hpp"

namespace fsmaps {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw InvalidInput("malformed partition '" + std::string(text) + "'");
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw InvalidInput("malformed partition '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
      if (value > 1000) throw InvalidInput("partition part too large");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

std::vector<int> Partition::contents() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back(j - static_cast<int>(i));
  return out;
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

std::string Partition::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (d >= 0) rec(d, d);
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw InvalidInput("factorial argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t z_factor(const Partition& lambda) {
  if (lambda.empty()) throw InvalidInput("z(λ) needs a non-empty partition");
  std::uint64_t z = 1;
  for (int p : lambda.parts()) z *= static_cast<std::uint64_t>(p);
  for (int j = 1; j <= lambda[0]; ++j) z *= factorial(lambda.multiplicity(j));
  return z;
}

std::uint64_t class_size(const Partition& lambda) { return factorial(lambda.size()) / z_factor(lambda); }

}  // namespace fsmaps
