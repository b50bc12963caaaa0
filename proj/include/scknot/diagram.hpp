#pragma once

// Oriented long-knot diagrams.
//
// A diagram is stored as its based signed Gauss sequence, read from the open
// start end to the open finish end. Crossing ids are canonical: 1..c in order
// of first appearance. The PD view labels the 2c+1 edges 0..2c along the
// knot, so edge p runs into the p-th passage and edge p+1 out of it; edges 0
// and 2c are the open ends.
//
// Sign convention: a crossing is +1 when (over direction, under direction)
// is a positively oriented frame (right-handed crossing).

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace scknot {

struct GaussEntry {
  int crossing = 1;
  bool over = true;
  int sign = 1;
  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

struct Crossing {
  int id = 1;
  int sign = 1;
  // Counterclockwise from the incoming under edge:
  //   +1: (under in, over out, under out, over in)
  //   -1: (under in, over in,  under out, over out)
  std::array<int, 4> pd{};
  int over_position = 0;   // index in the Gauss sequence of the over passage
  int under_position = 0;  // index of the under passage
};

class LongKnotDiagram {
 public:
  LongKnotDiagram() = default;

  // Validates (each id exactly twice, once over and once under, equal signs)
  // and relabels ids canonically. Throws DomainError.
  static LongKnotDiagram from_gauss(const std::vector<GaussEntry>& gauss);
  static LongKnotDiagram parse_gauss(std::string_view text);
  static LongKnotDiagram parse_pd(std::string_view text);

  const std::vector<GaussEntry>& gauss() const { return gauss_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }  // indexed by id-1
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count() + 1; }

  // "O1+ U2+ ..."; empty string for the trivial diagram.
  std::string gauss_code() const;
  // "X(a,b,c,d),X(...)" ordered by crossing id; empty for the trivial diagram.
  std::string pd_code() const;

  friend bool operator==(const LongKnotDiagram& a, const LongKnotDiagram& b) { return a.gauss_ == b.gauss_; }

 private:
  std::vector<GaussEntry> gauss_;
  std::vector<Crossing> crossings_;
};

}  // namespace scknot
