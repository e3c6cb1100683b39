#include "coxalg/weights.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxalg {

const char* repr_type_name(ReprType t) {
  switch (t) {
    case ReprType::Domestic: return "domestic";
    case ReprType::Tubular: return "tubular";
    case ReprType::Wild: return "wild";
  }
  throw std::logic_error("unknown representation type");
}

unsigned dynkin_index(DynkinLabel l) {
  switch (l) {
    case DynkinLabel::L2222: return 2;
    case DynkinLabel::L333: return 3;
    case DynkinLabel::L244: return 4;
    case DynkinLabel::L236: return 6;
  }
  throw std::logic_error("unknown Dynkin label");
}

const std::vector<unsigned>& dynkin_parts(DynkinLabel l) {
  static const std::vector<unsigned> p2222{2, 2, 2, 2};
  static const std::vector<unsigned> p333{3, 3, 3};
  static const std::vector<unsigned> p244{2, 4, 4};
  static const std::vector<unsigned> p236{2, 3, 6};
  switch (l) {
    case DynkinLabel::L2222: return p2222;
    case DynkinLabel::L333: return p333;
    case DynkinLabel::L244: return p244;
    case DynkinLabel::L236: return p236;
  }
  throw std::logic_error("unknown Dynkin label");
}

std::string dynkin_name(DynkinLabel l) {
  std::ostringstream os;
  os << "[";
  const auto& parts = dynkin_parts(l);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << "]";
  return os.str();
}

WeightSequence::WeightSequence(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned v : parts_)
    if (v == 0) throw std::invalid_argument("weight entries must be positive");
  std::erase(parts_, 1u);
  std::sort(parts_.begin(), parts_.end());
  if (parts_.size() < 2)
    throw std::invalid_argument("a weight sequence needs at least two entries above 1");
}

std::optional<WeightSequence> WeightSequence::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) return std::nullopt;
    parts.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size() && text[pos] != ',') return std::nullopt;
  }
  if (parts.empty()) return std::nullopt;
  try {
    return WeightSequence(std::move(parts));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

unsigned WeightSequence::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned WeightSequence::sum_minus_t() const { return sum() - t(); }

std::string WeightSequence::str() const {
  std::ostringstream os;
  os << "(" << csv() << ")";
  return os.str();
}

std::string WeightSequence::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Rat euler_char(const WeightSequence& p) {
  Rat chi = 2;
  for (unsigned v : p.parts()) chi -= Rat(Int(v) - 1, Int(v));
  return chi;
}

ReprType classify(const WeightSequence& p) {
  Rat chi = euler_char(p);
  if (chi > 0) return ReprType::Domestic;
  if (chi == 0) return ReprType::Tubular;
  return ReprType::Wild;
}

bool dominates(const WeightSequence& p, const WeightSequence& q) {
  const auto& a = p.parts();
  const auto& b = q.parts();
  std::size_t na = a.size(), nb = b.size();
  std::size_t n = std::max(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    // pad the shorter sequence with 1s on the left
    unsigned av = i + na >= n ? a[i + na - n] : 1u;
    unsigned bv = i + nb >= n ? b[i + nb - n] : 1u;
    if (av > bv) return false;
  }
  return true;
}

bool strictly_dominated_by(const WeightSequence& p, const WeightSequence& q) {
  return dominates(p, q) && p != q;
}

DynkinLabel dynkin_label(const WeightSequence& p) {
  if (classify(p) != ReprType::Wild)
    throw std::invalid_argument("Dynkin label is defined for wild weights only");
  if (p.t() >= 4) return DynkinLabel::L2222;
  // t = 3: the candidate shapes have distinct sums 9, 10, 11, so the first
  // componentwise fit is the unique minimum
  static const DynkinLabel order[] = {DynkinLabel::L333, DynkinLabel::L244, DynkinLabel::L236};
  for (DynkinLabel l : order) {
    const auto& parts = dynkin_parts(l);
    bool fits = true;
    for (std::size_t i = 0; i < 3; ++i)
      if (parts[i] > p.parts()[i]) fits = false;
    if (fits) return l;
  }
  throw std::logic_error("wild triple fits no minimal star shape");
}

const std::vector<WeightSequence>& critical_list() {
  static const std::vector<WeightSequence> list = [] {
    const std::vector<std::vector<unsigned>> raw = {
        {2, 3, 11}, {2, 4, 9}, {2, 5, 8}, {2, 6, 7}, {3, 3, 8}, {3, 4, 7},
        {3, 5, 6}, {4, 4, 6}, {4, 5, 5}, {2, 2, 2, 7}, {2, 2, 3, 6}, {2, 3, 4, 4},
        {3, 3, 3, 4}, {2, 2, 2, 2, 5}, {2, 2, 2, 3, 4}, {2, 2, 3, 3, 3},
        {2, 2, 2, 2, 2, 3}, {2, 2, 2, 2, 2, 2, 2}};
    std::vector<WeightSequence> out;
    out.reserve(raw.size());
    for (const auto& w : raw) out.emplace_back(w);
    return out;
  }();
  return list;
}

bool in_circle_list(const WeightSequence& p) {
  if (classify(p) != ReprType::Wild)
    throw std::invalid_argument("the circle list concerns wild weights only");
  for (const auto& c : critical_list())
    if (strictly_dominated_by(p, c)) return true;
  return false;
}

namespace {

void enumerate_rec(unsigned max_sum, unsigned max_entry, unsigned max_t, unsigned min_entry,
                   unsigned sum, std::vector<unsigned>& cur,
                   std::vector<WeightSequence>& out) {
  if (cur.size() >= 2) out.emplace_back(cur);
  if (cur.size() == max_t) return;
  for (unsigned v = min_entry; v <= max_entry && sum + v <= max_sum; ++v) {
    cur.push_back(v);
    enumerate_rec(max_sum, max_entry, max_t, v, sum + v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WeightSequence> enumerate_weights(unsigned max_sum, unsigned max_entry, unsigned max_t) {
  std::vector<WeightSequence> out;
  std::vector<unsigned> cur;
  enumerate_rec(max_sum, max_entry, max_t, 2, 0, cur, out);
  return out;
}

std::vector<WeightSequence> enumerate_wild(unsigned max_sum, unsigned max_entry, unsigned max_t) {
  std::vector<WeightSequence> all = enumerate_weights(max_sum, max_entry, max_t);
  std::erase_if(all, [](const WeightSequence& p) { return classify(p) != ReprType::Wild; });
  return all;
}

}  // namespace coxalg
