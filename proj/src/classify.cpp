#include "gsigma/classify.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gsigma/error.hpp"
#include "gsigma/grammian.hpp"
#include "gsigma/parallel.hpp"

namespace gsigma {

namespace {

std::vector<ProjectorCombo> orbit_of(const ProjectorCombo& c, Equivalence eq) {
  const bool self_dual = 2 * c.m() == c.n();
  std::vector<ProjectorCombo> out{c};
  if (eq == Equivalence::Standard) {
    out.push_back(self_dual ? c.complemented() : c.reversed());
  } else {
    out.push_back(c.reversed());
    if (self_dual) {
      out.push_back(c.complemented());
      out.push_back(c.reversed().complemented());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Pairs prefer the consecutive member so that r_i/r_ij naming survives the
// completion pairing in G(2,4); beyond m = 2 the smallest index list wins.
bool preferred(const ProjectorCombo& a, const ProjectorCombo& b) {
  if (a.m() <= 2 && a.runs() != b.runs()) return a.runs() < b.runs();
  return a < b;
}

std::vector<std::uint32_t> masks_with_popcount(int n, int m) {
  std::vector<std::uint32_t> out;
  std::uint32_t v = (1U << m) - 1U;
  const std::uint32_t limit = 1U << n;
  while (v < limit) {
    out.push_back(v);
    const std::uint32_t t = v | (v - 1U);
    v = (t + 1U) | (((~t & -~t) - 1U) >> (std::countr_zero(v) + 1));
  }
  return out;
}

}  // namespace

std::vector<ComboOrbit> enumerate(int m, int n, int max_n, Equivalence eq) {
  check_dimension(n, max_n);
  if (m < 1 || m >= n) throw Error(ErrorCode::InvalidArgument, "model G(m,n) needs 1 <= m < n");

  std::map<std::uint32_t, std::vector<ProjectorCombo>> groups;
  for (std::uint32_t bits : masks_with_popcount(n, m)) {
    const ProjectorCombo c(n, bits);
    auto members = orbit_of(c, eq);
    const auto canon = *std::min_element(members.begin(), members.end(), preferred);
    if (canon == c) groups.emplace(bits, std::move(members));
  }

  std::vector<ComboOrbit> orbits;
  for (auto& [bits, members] : groups) {
    const ProjectorCombo canon(n, bits);
    const bool holo = std::any_of(members.begin(), members.end(),
                                  [](const ProjectorCombo& c) { return c.is_holomorphic(); });
    orbits.push_back({canon, std::move(members), RValue{}, holo});
  }

  // The M_i table is shared; build it once before fanning out.
  (void)mdet_table(n, max_n);
  parallel_for(orbits.size(), [&](std::size_t k) {
    auto& orbit = orbits[k];
    orbit.r = extract_r(orbit.canonical, max_n);
    for (const auto& member : orbit.members)
      if (extract_r(member, max_n) != orbit.r)
        throw Error(ErrorCode::Internal, "orbit of " + orbit.canonical.mask_string() + " mixes curvature integers");
  });
  return orbits;
}

RTable table(int m, int n, int max_n) {
  auto orbits = enumerate(m, n, max_n);
  std::sort(orbits.begin(), orbits.end(), [](const ComboOrbit& a, const ComboOrbit& b) {
    if (a.canonical.runs() != b.canonical.runs()) return a.canonical.runs() < b.canonical.runs();
    return a.canonical < b.canonical;
  });
  RTable t{m, n, {}};
  for (auto& o : orbits) t.rows.push_back({o.canonical.label(), o.r.r, o.holomorphic, o.canonical, o.members});
  return t;
}

std::vector<Coincidence> coincidences(int m, int n, int max_n) {
  std::map<long, std::vector<std::string>> by_r;
  for (const auto& row : table(m, n, max_n).rows) by_r[row.r].push_back(row.label);
  std::vector<Coincidence> out;
  for (auto& [r, labels] : by_r)
    if (labels.size() >= 2) out.push_back({r, std::move(labels)});
  return out;
}

BoundReport verify_bounds(int m, int n, int max_n) {
  BoundReport rep;
  rep.m = m;
  rep.n = n;
  if (m < 1 || m >= n || n < 2 * m - 1) {
    rep.note = "bound formula inapplicable: needs n >= 2m-1";
    return rep;
  }
  rep.applicable = true;
  const BoundFamily family = m == 1 ? BoundFamily::CP : m == 2 ? BoundFamily::G2 : m == 3 ? BoundFamily::G3
                                                                                          : BoundFamily::Gm;
  rep.bound = bound_formula(family, n, m);
  if (bound_formula(BoundFamily::Gm, n, m) != rep.bound) rep.note = "general-m bound disagrees with the G(m,.) form";

  const auto pattern = ProjectorCombo::from_indices(n, bound_pattern(m, n));
  rep.pattern_label = pattern.label();

  const RTable t = table(m, n, max_n);
  for (const auto& row : t.rows) rep.max_r = std::max(rep.max_r, row.r);
  bool pattern_hits = false;
  for (const auto& row : t.rows) {
    if (row.r != rep.max_r) continue;
    rep.achieved_by.push_back(row.label);
    if (std::find(row.members.begin(), row.members.end(), pattern) != row.members.end()) pattern_hits = true;
  }
  rep.passed = rep.note.empty() && rep.max_r == rep.bound && pattern_hits;
  if (rep.max_r == rep.bound && !pattern_hits) rep.note = "maximum not attained by the alternating pattern";
  return rep;
}

CountReport count_check(int m, int max_n) {
  CountReport rep;
  rep.m = m;
  rep.expected_nonholomorphic = binomial(2 * m, m).get_si() / 2 - 1;
  auto nonholo = [](const std::vector<ComboOrbit>& orbits) {
    return static_cast<long>(std::count_if(orbits.begin(), orbits.end(),
                                           [](const ComboOrbit& o) { return !o.holomorphic; }));
  };
  rep.nonholomorphic = nonholo(enumerate(m, 2 * m, max_n, Equivalence::Standard));
  rep.full_group_nonholomorphic = nonholo(enumerate(m, 2 * m, max_n, Equivalence::Full));
  rep.passed = rep.nonholomorphic == rep.expected_nonholomorphic;
  return rep;
}

std::string to_csv(const RTable& t) {
  std::ostringstream os;
  os << "label,r,holomorphic\n";
  for (const auto& row : t.rows) os << row.label << ',' << row.r << ',' << (row.holomorphic ? "true" : "false") << '\n';
  return os.str();
}

std::string to_json(const RTable& t) {
  nlohmann::ordered_json j;
  j["m"] = t.m;
  j["n"] = t.n;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (const auto& c : row.members) members.push_back(c.mask_string());
    j["rows"].push_back({{"label", row.label},
                         {"r", row.r},
                         {"curvature", to_fraction_string(make_rvalue(row.r).curvature)},
                         {"holomorphic", row.holomorphic},
                         {"mask", row.canonical.mask_string()},
                         {"members", members}});
  }
  return j.dump(2) + "\n";
}

std::string to_text(const RTable& t) {
  std::ostringstream os;
  os << "G(" << t.m << ',' << t.n << "): " << t.rows.size() << " inequivalent combinations\n";
  os << std::left << std::setw(12) << "label" << std::setw(6) << "r" << std::setw(8) << "K" << std::setw(7) << "holo"
     << "members\n";
  for (const auto& row : t.rows) {
    os << std::setw(12) << row.label << std::setw(6) << row.r << std::setw(8)
       << to_string(make_rvalue(row.r).curvature) << std::setw(7) << (row.holomorphic ? "yes" : "no");
    for (std::size_t k = 0; k < row.members.size(); ++k) os << (k ? " " : "") << row.members[k].mask_string();
    os << '\n';
  }
  return os.str();
}

}  // namespace gsigma
