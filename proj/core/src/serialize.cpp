#include "zpsum/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace zpsum {

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
}

std::int64_t take_int(std::string_view& s, const char* what) {
  skip_ws(s);
  std::int64_t value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) {
    throw std::invalid_argument(std::string("parse: expected ") + what);
  }
  s.remove_prefix(static_cast<std::size_t>(ptr - begin));
  return value;
}

void expect(std::string_view& s, char c) {
  skip_ws(s);
  if (s.empty() || s.front() != c) {
    throw std::invalid_argument(std::string("parse: expected '") + c + "'");
  }
  s.remove_prefix(1);
}

}  // namespace

std::string sequence_to_text(const ResidueSequence& a) {
  std::ostringstream out;
  out << "p=" << a.modulus().value() << "; A=";
  bool first = true;
  for (const auto& [r, c] : a.entries()) {
    if (!first) out << ',';
    first = false;
    out << r;
    if (c != 1) out << '^' << c;
  }
  return out.str();
}

ResidueSequence parse_sequence_text(std::string_view text) {
  std::string_view s = text;
  skip_ws(s);
  expect(s, 'p');
  expect(s, '=');
  const std::int64_t p_value = take_int(s, "prime");
  expect(s, ';');
  expect(s, 'A');
  expect(s, '=');
  PrimeModulus p(p_value);
  std::vector<std::pair<Residue, Count>> pairs;
  skip_ws(s);
  while (!s.empty()) {
    const std::int64_t elem = take_int(s, "element");
    Count mult = 1;
    skip_ws(s);
    if (!s.empty() && s.front() == '^') {
      s.remove_prefix(1);
      mult = take_int(s, "multiplicity");
    }
    pairs.emplace_back(p.reduce(elem), mult);
    skip_ws(s);
    if (s.empty()) break;
    expect(s, ',');
  }
  return ResidueSequence::from_pairs(p, pairs);
}

Json sequence_to_json(const ResidueSequence& a) {
  Json elements = Json::array();
  for (const auto& [r, c] : a.entries()) {
    elements.push_back(Json::array({r, c}));
  }
  return Json{{"p", a.modulus().value()}, {"elements", std::move(elements)}};
}

ResidueSequence sequence_from_json(const Json& j) {
  PrimeModulus p(j.at("p").get<std::int64_t>());
  std::vector<std::pair<Residue, Count>> pairs;
  for (const auto& e : j.at("elements")) {
    pairs.emplace_back(p.reduce(e.at(0).get<std::int64_t>()),
                       e.at(1).get<Count>());
  }
  return ResidueSequence::from_pairs(p, pairs);
}

Json mask_to_json(const SumsetMask& m) {
  return Json{{"p", m.modulus().value()}, {"residues", m.residues()}};
}

SumsetMask mask_from_json(const Json& j) {
  PrimeModulus p(j.at("p").get<std::int64_t>());
  SumsetMask m(p);
  for (const auto& r : j.at("residues")) m.set(p.reduce(r.get<Residue>()));
  return m;
}

Json to_json(const APWitness& w) {
  return Json{{"start", w.start}, {"diff", w.diff}, {"length", w.length}};
}

Json to_json(const IntRange& r) {
  return Json{{"lo", r.lo}, {"hi", r.hi}, {"length", r.length()}};
}

Json to_json(const ClassificationReport& r) {
  Json ls = Json::array();
  for (const auto& lr : r.l_results) {
    ls.push_back(Json{{"l", lr.l},
                      {"l_zero_sum_free", lr.l_zero_sum_free},
                      {"l_complete", lr.l_complete}});
  }
  return Json{{"zero_sum_free", r.zero_sum_free},
              {"complete", r.complete},
              {"l_results", std::move(ls)}};
}

Json to_json(const OlsonThresholdReport& r) {
  return Json{{"p", r.p},
              {"min_cardinality", r.min_cardinality},
              {"subsets_checked", r.subsets_checked.str()},
              {"violations", r.violations}};
}

Json to_json(const Thm1Witness& w, const ResidueSequence& a) {
  return Json{{"theorem", 1},
              {"b", w.b},
              {"a_flat", sequence_to_json(w.a_flat)},
              {"removed", w.a_flat.cardinality()},
              {"valid", validate(w, a)}};
}

Json to_json(const Thm2Witness& w, const ResidueSequence& a) {
  return Json{{"theorem", 2},
              {"b", w.b},
              {"a_flat", sequence_to_json(w.a_flat)},
              {"removed", w.a_flat.cardinality()},
              {"valid", validate(w, a)}};
}

Json to_json(const Thm3Witness& w, const ResidueSequence& a) {
  return Json{{"theorem", 3},
              {"b", w.b},
              {"c", w.c},
              {"a_flat", sequence_to_json(w.a_flat)},
              {"removed", w.a_flat.cardinality()},
              {"l1", w.l1},
              {"window", w.window},
              {"valid", validate(w, a)}};
}

Thm1Witness thm1_from_json(const Json& j, const PrimeModulus& p) {
  (void)p;
  return {j.at("b").get<Residue>(), sequence_from_json(j.at("a_flat"))};
}

Thm2Witness thm2_from_json(const Json& j, const PrimeModulus& p) {
  (void)p;
  return {j.at("b").get<Residue>(), sequence_from_json(j.at("a_flat"))};
}

Thm3Witness thm3_from_json(const Json& j, const PrimeModulus& p) {
  (void)p;
  return {j.at("b").get<Residue>(), j.at("c").get<Residue>(),
          sequence_from_json(j.at("a_flat")), j.at("l1").get<Count>(),
          j.at("window").get<Count>()};
}

Json to_json(const ZeroFree2Report& r) {
  return Json{{"b", r.b},
              {"low_half_norm_sum", r.low_half_norm_sum},
              {"high_half_norm_sum", r.high_half_norm_sum}};
}

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::A1:
      return "A1";
    case Family::A2:
      return "A2";
    case Family::A3:
      return "A3";
  }
  return "?";
}

}  // namespace

Json to_json(const ExtremalSpec& s) {
  Json j{{"family", family_name(s.family)},
         {"p", s.p},
         {"m", s.m},
         {"n", s.n},
         {"k", s.k},
         {"cardinality", s.sequence.cardinality()},
         {"sequence", sequence_to_json(s.sequence)},
         {"degenerate", s.degenerate}};
  if (s.l) j["l"] = *s.l;
  return j;
}

Json to_json(const ZeroFree3Extremal& r) {
  return Json{{"members", r.members},
              {"n", r.n},
              {"special", r.special},
              {"collision", r.collision}};
}

Json to_json(const ZeroFree3ScanReport& r) {
  return Json{{"p", r.p},
              {"n", r.n},
              {"subsets_enumerated", r.subsets_enumerated.str()},
              {"zero_sum_free_sets", r.zero_sum_free_sets}};
}

Json to_json(const PartitionTable& t) {
  Json values = Json::array();
  for (const BigInt& v : t.values) values.push_back(v.str());
  return Json{{"m_bound", t.m_bound}, {"values", std::move(values)}};
}

Json to_json(const CensusReport& r) {
  return Json{{"p", r.p},
              {"m", r.m},
              {"count_zero_sum_free", r.count_zero_sum_free.str()},
              {"count_incomplete", r.count_incomplete.str()},
              {"log_ratio_zsf", r.log_ratio_zsf},
              {"log_ratio_inc", r.log_ratio_inc},
              {"multisets_enumerated", r.multisets_enumerated.str()}};
}

Json to_json(const EGZReport& r) {
  Json cs = Json::array();
  for (const auto& seq : r.counterexamples) cs.push_back(sequence_to_json(seq));
  return Json{{"p", r.p},
              {"total_multisets", r.total_multisets.str()},
              {"counterexamples", std::move(cs)}};
}

Json to_json(const EGZExtremalReport& r) {
  Json xs = Json::array();
  for (const auto& seq : r.extremal) xs.push_back(sequence_to_json(seq));
  return Json{{"p", r.p},
              {"total_multisets", r.total_multisets.str()},
              {"extremal", std::move(xs)},
              {"shape_deviations", r.shape_deviations}};
}

Json to_json(const Thm62Report& r) {
  return Json{{"a", r.a},     {"b", r.b},         {"m_a", r.m_a},
              {"m_b", r.m_b}, {"slack", r.slack}, {"f_pp", r.f_pp}};
}

Json to_json(const CRTRepresentation& r) {
  return Json{
      {"d_list", r.d_list}, {"D", r.D}, {"r", r.r}, {"a_list", r.a_list}};
}

Json to_json(const OlsonProbeReport& r) {
  return Json{{"p", r.p},
              {"min_ratio", r.min_ratio},
              {"argmin_set", r.argmin_set},
              {"argmin_l", r.argmin_l},
              {"subsets_checked", r.subsets_checked.str()}};
}

Json to_json(const APProbeReport& r) {
  Json j{{"p", r.p},
         {"set_size", r.set_size},
         {"l", r.l},
         {"d", r.d},
         {"trials", r.trials},
         {"seed", r.seed},
         {"complete_count", r.complete_count}};
  if (r.min_ratio) {
    j["min_ratio"] = *r.min_ratio;
  } else {
    j["min_ratio"] = nullptr;
  }
  return j;
}

namespace {

std::string list_dilated(const ResidueSequence& a, Residue b, bool norms) {
  const PrimeModulus& p = a.modulus();
  std::ostringstream out;
  std::int64_t total = 0;
  bool first = true;
  for (const auto& [r, c] : a.entries()) {
    const Residue rb = p.mul(b, r);
    const std::int64_t v = norms ? p.norm(rb) : rb;
    for (Count j = 0; j < c; ++j) {
      if (!first) out << '+';
      first = false;
      out << v;
      total += v;
    }
  }
  out << " = " << total;
  return out.str();
}

}  // namespace

std::string proofline(const Thm1Witness& w, const ResidueSequence& a) {
  const ResidueSequence kept = a.remove(w.a_flat);
  std::ostringstream out;
  out << "sum over " << w.b << ".(A \\ A_flat): "
      << list_dilated(kept, w.b, false) << " < " << a.modulus().value();
  return out.str();
}

std::string proofline(const Thm2Witness& w, const ResidueSequence& a) {
  const ResidueSequence kept = a.remove(w.a_flat);
  std::ostringstream out;
  out << "norm sum over " << w.b << ".(A \\ A_flat): "
      << list_dilated(kept, w.b, true) << " < " << a.modulus().value();
  return out.str();
}

std::string proofline(const Thm3Witness& w, const ResidueSequence& a) {
  const ResidueSequence prime =
      translate(dilate(a.remove(w.a_flat), w.b), w.c);
  const std::vector<std::int64_t> vals = prime.signed_values();
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (Count lp = w.l1; lp <= w.l1 + w.window; ++lp) {
    const IntRange r = lsum_range_int(vals, lp);
    if (first) {
      lo = r.lo;
      hi = r.hi;
      first = false;
    } else {
      lo = std::min(lo, r.lo);
      hi = std::max(hi, r.hi);
    }
  }
  std::ostringstream out;
  out << "l'-sums for l' in [" << w.l1 << ", " << w.l1 + w.window
      << "] of " << w.b << ".(A \\ A_flat) + " << w.c << " lie in [" << lo
      << ", " << hi << "], length " << hi - lo << " < "
      << a.modulus().value();
  return out.str();
}

}  // namespace zpsum
