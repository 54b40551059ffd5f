#include "cmsym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "cmsym/errors.hpp"

namespace cmsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int a : parts_)
    if (a <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int a : parts_) weight_ += a;
}

int Partition::multiplicity(int a) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), a));
}

Partition Partition::with_part(int a) const {
  Partition r = *this;
  r.parts_.insert(std::upper_bound(r.parts_.begin(), r.parts_.end(), a, std::greater<>()), a);
  r.weight_ += a;
  return r;
}

Partition Partition::without_part(int a) const {
  Partition r = *this;
  auto it = std::find(r.parts_.begin(), r.parts_.end(), a);
  if (it == r.parts_.end()) throw std::invalid_argument("part not present");
  r.parts_.erase(it);
  r.weight_ -= a;
  return r;
}

Partition Partition::merged(const Partition& other) const {
  Partition r;
  r.parts_.resize(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), r.parts_.begin(),
             std::greater<>());
  r.weight_ = weight_ + other.weight_;
  return r;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

Dominance dominance_compare(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    throw WeightMismatch("dominance comparison needs equal weights: " + to_string(a) + " vs " + to_string(b));
  bool a_le = true, b_le = true;
  int sa = 0, sb = 0;
  std::size_t n = std::max(a.parts().size(), b.parts().size());
  for (std::size_t i = 0; i < n; ++i) {
    sa += i < a.parts().size() ? a[i] : 0;
    sb += i < b.parts().size() ? b[i] : 0;
    if (sa > sb) a_le = false;
    if (sb > sa) b_le = false;
  }
  if (a_le && b_le) return Dominance::equal;
  if (a_le) return Dominance::less;
  if (b_le) return Dominance::greater;
  return Dominance::incomparable;
}

bool dominated_by(const Partition& a, const Partition& b) {
  auto c = dominance_compare(a, b);
  return c == Dominance::less || c == Dominance::equal;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int a = std::min(remaining, max_part); a >= 1; --a) {
    current.push_back(a);
    generate(remaining - a, a, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  generate(n, n, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int d = n; d >= 0; --d) {
    auto ps = partitions_of(d);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

bool refinement_before(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() > b.weight();
  return a.parts() > b.parts();
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "-" || text.empty()) {
    if (text.empty()) throw ParseError("empty partition text (use '-' for the empty partition)");
    return Partition();
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0)
      throw ParseError("invalid partition part '" + std::string(tok) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw ParseError("partition parts must be weakly decreasing: '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

}  // namespace cmsym
