#include "knotfold/diagram.hpp"

#include "knotfold/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

namespace knotfold {

namespace {

struct Endpoint {
  std::size_t crossing;
  int position;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  std::sort(crossings_.begin(), crossings_.end(),
            [](const Crossing& a, const Crossing& b) { return a.arcs < b.arcs; });
  if (crossings_.empty()) return;

  std::map<int, std::vector<Endpoint>> occurrences;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    for (int p = 0; p < 4; ++p) {
      const int label = crossings_[c].arcs[static_cast<std::size_t>(p)];
      if (label <= 0)
        throw Error(ErrorKind::BadArcMultiplicity, "arc labels must be positive, got " + std::to_string(label));
      occurrences[label].push_back({c, p});
    }
  }
  for (const auto& [label, ends] : occurrences) {
    if (ends.size() != 2)
      throw Error(ErrorKind::BadArcMultiplicity,
                  "arc " + std::to_string(label) + " appears " + std::to_string(ends.size()) + " times");
  }
  auto other_end = [&](int label, Endpoint here) {
    const auto& ends = occurrences.at(label);
    return ends[0] == here ? ends[1] : ends[0];
  };

  incoming_over_.assign(crossings_.size(), 0);
  // Directed walk entering arc `start` through `head`; each step leaves the
  // crossing straight through and enters the next one.
  auto walk = [&](int start, Endpoint head) {
    std::vector<Visit> visits;
    Endpoint at = head;
    int label = start;
    do {
      visits.push_back({at.crossing, at.position});
      const int exit = (at.position + 2) % 4;
      label = crossings_[at.crossing].arcs[static_cast<std::size_t>(exit)];
      at = other_end(label, {at.crossing, exit});
    } while (!(label == start && at == head));
    return visits;
  };
  auto enters_backwards = [](const std::vector<Visit>& visits) {
    return std::any_of(visits.begin(), visits.end(), [](const Visit& v) { return v.entry == 2; });
  };

  std::vector<bool> visited(crossings_.size() * 4, false);
  components_ = 0;
  for (const auto& [start, ends] : occurrences) {
    if (visited[ends[0].crossing * 4 + static_cast<std::size_t>(ends[0].position)]) continue;
    std::vector<Visit> visits = walk(start, ends[0]);
    if (enters_backwards(visits)) {
      visits = walk(start, ends[1]);
      if (enters_backwards(visits))
        throw Error(ErrorKind::Disconnected, "strand orientation is inconsistent on the component of arc " +
                                                 std::to_string(start));
    }
    for (const auto& v : visits) {
      const int exit = (v.entry + 2) % 4;
      visited[v.crossing * 4 + static_cast<std::size_t>(v.entry)] = true;
      visited[v.crossing * 4 + static_cast<std::size_t>(exit)] = true;
      if (v.entry % 2 == 1) incoming_over_[v.crossing] = v.entry;
    }
    traversals_.push_back(std::move(visits));
    ++components_;
  }
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    if (incoming_over_[c] == 0)
      throw Error(ErrorKind::Disconnected, "crossing " + std::to_string(c) + " is not traversed consistently");
  }
}

DTSequence parse_dt(std::string_view text) {
  DTSequence code;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int value = 0;
    const char* first = token.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorKind::NonInteger, "DT token '" + token + "' is not an integer");
    if (value % 2 != 0 || value == 0)
      throw Error(ErrorKind::OddEntry, "DT entry " + token + " is not a nonzero even integer");
    code.entries.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']' || ch == '(' ||
        ch == ')') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();

  const std::size_t n = code.entries.size();
  std::vector<bool> seen(n + 1, false);
  for (int e : code.entries) {
    const std::size_t half = static_cast<std::size_t>(std::abs(e) / 2);
    if (half < 1 || half > n || seen[half])
      throw Error(ErrorKind::DuplicateOrGap, "DT entries must be exactly {2, ..., " + std::to_string(2 * n) + "}");
    seen[half] = true;
  }
  return code;
}

DTSequence dt_from_pd(const PlanarDiagram& d, DtSignConvention convention) {
  DTSequence code;
  if (d.crossing_count() == 0) return code;
  if (d.component_count() != 1) throw Error(ErrorKind::Unsupported, "DT codes describe knots only");
  const auto& visits = d.traversals().front();
  const std::size_t n = d.crossing_count();
  std::vector<std::array<int, 2>> labels(n, {0, 0});
  std::vector<bool> even_over(n, false);
  for (std::size_t t = 0; t < visits.size(); ++t) {
    const int label = static_cast<int>(t) + 1;
    auto& slot = labels[visits[t].crossing];
    (slot[0] == 0 ? slot[0] : slot[1]) = label;
    if (label % 2 == 0) even_over[visits[t].crossing] = visits[t].over();
  }
  code.entries.assign(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    const int odd = labels[c][0] % 2 == 1 ? labels[c][0] : labels[c][1];
    const int even = labels[c][0] % 2 == 0 ? labels[c][0] : labels[c][1];
    if (odd % 2 == 0 || even % 2 == 1) throw Error(ErrorKind::Unsupported, "diagram is not DT-codable");
    const bool negative = convention == DtSignConvention::a ? even_over[c] : !even_over[c];
    code.entries[static_cast<std::size_t>(odd / 2)] = negative ? -even : even;
  }
  return code;
}

PlanarDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']') {
      ++i;
      continue;
    }
    if (text.substr(i, 3) == "PD[") {
      i += 3;
      continue;
    }
    if (ch != 'X' && ch != 'x')
      throw Error(ErrorKind::MalformedInput, "expected 'X' in PD text at offset " + std::to_string(i));
    ++i;
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw Error(ErrorKind::MalformedInput, "expected '(' after 'X'");
    const char close = text[i] == '(' ? ')' : ']';
    const std::size_t end = text.find(close, i);
    if (end == std::string_view::npos) throw Error(ErrorKind::MalformedInput, "unterminated crossing");
    std::string body(text.substr(i + 1, end - i - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    Crossing x;
    std::string tok;
    int count = 0;
    while (in >> tok) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw Error(ErrorKind::NonInteger, "PD label '" + tok + "' is not an integer");
      if (count >= 4) throw Error(ErrorKind::MalformedInput, "crossing with more than 4 labels");
      x.arcs[static_cast<std::size_t>(count++)] = value;
    }
    if (count != 4) throw Error(ErrorKind::MalformedInput, "crossing with fewer than 4 labels");
    crossings.push_back(x);
    i = end + 1;
  }
  return PlanarDiagram(std::move(crossings));
}

std::string serialize_pd(const PlanarDiagram& d) {
  std::string out;
  for (const auto& x : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(x.arcs[0]) + "," + std::to_string(x.arcs[1]) + "," + std::to_string(x.arcs[2]) +
           "," + std::to_string(x.arcs[3]) + ")";
  }
  return out;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return d;
  std::vector<Crossing> flipped;
  flipped.reserve(d.crossing_count());
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto& a = d.crossings()[c].arcs;
    const std::size_t r = static_cast<std::size_t>(d.incoming_over_position(c));
    flipped.push_back({{a[r], a[(r + 1) % 4], a[(r + 2) % 4], a[(r + 3) % 4]}});
  }
  return PlanarDiagram(std::move(flipped));
}

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) w += d.sign(c);
  return w;
}

bool is_alternating(const PlanarDiagram& d) {
  std::map<int, int> over_ends;
  for (const auto& x : d.crossings())
    for (int p = 0; p < 4; ++p) over_ends[x.arcs[static_cast<std::size_t>(p)]] += p % 2;
  return std::all_of(over_ends.begin(), over_ends.end(), [](const auto& kv) { return kv.second == 1; });
}

}  // namespace knotfold
