#include "scknot/diagram.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "scknot/error.hpp"

namespace scknot {

LongKnotDiagram LongKnotDiagram::from_gauss(const std::vector<GaussEntry>& gauss) {
  std::map<int, int> relabel;
  LongKnotDiagram d;
  d.gauss_.reserve(gauss.size());
  for (const GaussEntry& e : gauss) {
    if (e.sign != 1 && e.sign != -1) throw DomainError("crossing sign must be +1 or -1");
    auto [it, inserted] = relabel.try_emplace(e.crossing, static_cast<int>(relabel.size()) + 1);
    d.gauss_.push_back({it->second, e.over, e.sign});
  }
  const std::size_t c = relabel.size();
  d.crossings_.resize(c);
  std::vector<int> over_seen(c, -1), under_seen(c, -1);
  for (std::size_t p = 0; p < d.gauss_.size(); ++p) {
    const GaussEntry& e = d.gauss_[p];
    auto idx = static_cast<std::size_t>(e.crossing - 1);
    auto& slot = e.over ? over_seen[idx] : under_seen[idx];
    if (slot >= 0) {
      throw DomainError("crossing " + std::to_string(e.crossing) + " passed " + (e.over ? "over" : "under") +
                        " twice");
    }
    slot = static_cast<int>(p);
  }
  for (std::size_t k = 0; k < c; ++k) {
    if (over_seen[k] < 0 || under_seen[k] < 0) {
      throw DomainError("crossing " + std::to_string(k + 1) + " must appear once over and once under");
    }
    const int po = over_seen[k];
    const int pu = under_seen[k];
    const int sign = d.gauss_[static_cast<std::size_t>(po)].sign;
    if (d.gauss_[static_cast<std::size_t>(pu)].sign != sign) {
      throw DomainError("crossing " + std::to_string(k + 1) + " has inconsistent signs");
    }
    Crossing& x = d.crossings_[k];
    x.id = static_cast<int>(k) + 1;
    x.sign = sign;
    x.over_position = po;
    x.under_position = pu;
    x.pd = sign > 0 ? std::array<int, 4>{pu, po + 1, pu + 1, po} : std::array<int, 4>{pu, po, pu + 1, po + 1};
  }
  return d;
}

std::string LongKnotDiagram::gauss_code() const {
  std::string out;
  for (const GaussEntry& e : gauss_) {
    if (!out.empty()) out += ' ';
    out += e.over ? 'O' : 'U';
    out += std::to_string(e.crossing);
    out += e.sign > 0 ? '+' : '-';
  }
  return out;
}

std::string LongKnotDiagram::pd_code() const {
  std::string out;
  for (const Crossing& x : crossings_) {
    if (!out.empty()) out += ',';
    out += "X(" + std::to_string(x.pd[0]) + "," + std::to_string(x.pd[1]) + "," + std::to_string(x.pd[2]) + "," +
           std::to_string(x.pd[3]) + ")";
  }
  return out;
}

LongKnotDiagram LongKnotDiagram::parse_gauss(std::string_view text) {
  std::vector<GaussEntry> entries;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U') || (tok.back() != '+' && tok.back() != '-')) {
      throw ParseError("bad Gauss token '" + std::string(tok) + "'", start);
    }
    int id = 0;
    auto digits = tok.substr(1, tok.size() - 2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || id < 1) {
      throw ParseError("bad crossing id in '" + std::string(tok) + "'", start + 1);
    }
    entries.push_back({id, tok[0] == 'O', tok.back() == '+' ? 1 : -1});
  }
  return from_gauss(entries);
}

LongKnotDiagram LongKnotDiagram::parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> quads;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text.substr(i, 2) != "X(") throw ParseError("expected 'X('", i);
    i += 2;
    std::array<int, 4> q{};
    for (int k = 0; k < 4; ++k) {
      while (i < text.size() && text[i] == ' ') ++i;
      const std::size_t at = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      auto [ptr, ec] = std::from_chars(text.data() + at, text.data() + i, q[static_cast<std::size_t>(k)]);
      if (ec != std::errc() || ptr != text.data() + i) throw ParseError("expected arc label", at);
      while (i < text.size() && text[i] == ' ') ++i;
      const char want = k < 3 ? ',' : ')';
      if (i >= text.size() || text[i] != want) throw ParseError(std::string("expected '") + want + "'", i);
      ++i;
    }
    quads.push_back(q);
    skip();
  }

  const int c = static_cast<int>(quads.size());
  std::vector<GaussEntry> gauss(static_cast<std::size_t>(2 * c), GaussEntry{0, false, 0});
  std::vector<bool> used(static_cast<std::size_t>(2 * c), false);
  auto place = [&](int pos, GaussEntry e) {
    if (pos < 0 || pos >= 2 * c || used[static_cast<std::size_t>(pos)]) {
      throw DomainError("PD code is not a long knot with arcs labelled 0.." + std::to_string(2 * c));
    }
    used[static_cast<std::size_t>(pos)] = true;
    gauss[static_cast<std::size_t>(pos)] = e;
  };
  for (int k = 0; k < c; ++k) {
    const auto& q = quads[static_cast<std::size_t>(k)];
    if (q[2] != q[0] + 1) throw DomainError("PD crossing " + std::to_string(k + 1) + ": under strand must run a -> a+1");
    int sign = 0;
    int over_in = 0;
    if (q[1] == q[3] + 1) {
      sign = 1;
      over_in = q[3];
    } else if (q[3] == q[1] + 1) {
      sign = -1;
      over_in = q[1];
    } else {
      throw DomainError("PD crossing " + std::to_string(k + 1) + ": over strand labels are not consecutive");
    }
    place(q[0], {k + 1, false, sign});
    place(over_in, {k + 1, true, sign});
  }
  return from_gauss(gauss);
}

}  // namespace scknot
