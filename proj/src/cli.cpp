#include "hyperrank/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hyperrank/acceptance.hpp"
#include "hyperrank/circulant.hpp"
#include "hyperrank/codes.hpp"
#include "hyperrank/diffset.hpp"
#include "hyperrank/errors.hpp"
#include "hyperrank/glynn.hpp"
#include "hyperrank/rank2.hpp"
#include "hyperrank/reports.hpp"
#include "hyperrank/residue.hpp"
#include "hyperrank/segre.hpp"
#include "hyperrank/seqtools.hpp"

namespace hyperrank {

namespace {

using Json = nlohmann::ordered_json;

struct Output {
  Json params = Json::object();
  std::optional<int> field_degree;
  std::optional<FieldSpec> field;
  Json payload;
  std::optional<std::string> csv;
  std::optional<std::string> text;
  int exit_code = kExitOk;  // output is still written when nonzero
};

Json big_json(const BigInt& v) {
  if (auto u = big_to_u64(v)) return *u;
  if (sgn(v) < 0 && mpz_sizeinbase(v.get_mpz_t(), 2) < 63) return v.get_si();
  return v.get_str();
}

BigInt json_big(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return big_from_u64(j.get<std::uint64_t>());
  if (j.is_number_integer()) return big_from_i64(j.get<std::int64_t>());
  throw InputError("expected an integer, got " + j.dump());
}

Json field_json(const FieldSpec& f) {
  return {{"d", f.degree()}, {"modulus_hex", to_hex(f.modulus())}, {"generator_hex", to_hex(f.generator().bits)}};
}

std::string hex_elem(std::uint32_t e) { return to_hex(e); }

std::uint32_t parse_hex32(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos, 16);
  } catch (const std::exception&) {
    throw InputError("bad hex value '" + s + "'");
  }
  if (pos != s.size() || v > 0xffffffffULL) throw InputError("bad hex value '" + s + "'");
  return static_cast<std::uint32_t>(v);
}

std::string read_source(const std::string& where) {
  if (where == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(where);
  if (!in) throw InputError("cannot read '" + where + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

// Inline JSON if it looks like an object, else a file name.
Json json_arg(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg);
  return parse_json_text(read_source(arg));
}

std::vector<BigInt> parse_terms(const std::string& arg) {
  std::string text = arg;
  if (arg.find_first_not_of("0123456789-, \t\r\n") != std::string::npos) text = read_source(arg);
  for (char& c : text)
    if (c == '\n' || c == '\r' || c == '\t' || c == ' ') c = ',';
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789-") != std::string::npos || item == "-")
      throw InputError("bad term '" + item + "'");
    out.emplace_back(item);
  }
  if (out.empty()) throw InputError("no terms supplied");
  return out;
}

Json provenance_json(const Provenance& p) {
  struct V {
    Json operator()(const HyperovalTau& t) const { return {{"kind", "hyperoval"}, {"k", t.k}}; }
    Json operator()(const SingerTag&) const { return {{"kind", "singer"}}; }
    Json operator()(const QuadraticResidueTag&) const { return {{"kind", "qr"}}; }
    Json operator()(const GmwTag& g) const {
      return {{"kind", "gmw"}, {"u", g.u}, {"v", g.v}, {"r", g.r}, {"w", g.w}};
    }
    Json operator()(const ExplicitListTag&) const { return {{"kind", "explicit"}}; }
  };
  return std::visit(V{}, p);
}

Provenance provenance_from_json(const Json& j) {
  std::string kind = j.value("kind", "explicit");
  if (kind == "hyperoval") return HyperovalTau{j.at("k").get<std::uint64_t>()};
  if (kind == "singer") return SingerTag{};
  if (kind == "qr") return QuadraticResidueTag{};
  if (kind == "gmw")
    return GmwTag{j.at("u").get<int>(), j.at("v").get<int>(), j.at("r").get<std::uint64_t>(), j.at("w").get<int>()};
  return ExplicitListTag{};
}

Json diffset_json(const DiffSet& s, const std::string& family) {
  Json elems = Json::array();
  for (auto e : s.elements) elems.push_back(hex_elem(e));
  return {{"d", s.d},
          {"family", family},
          {"params", {{"v", s.params.v}, {"k", s.params.k}, {"lambda", s.params.lambda}}},
          {"provenance", provenance_json(s.provenance)},
          {"elements_hex", elems}};
}

// Accepts a full envelope or a bare diffset payload; the field comes from field_metadata when present.
std::pair<DiffSet, FieldSpec> diffset_from_json(const Json& doc) {
  try {
    const Json& p = doc.contains("payload") ? doc.at("payload") : doc;
    DiffSet s;
    s.d = p.at("d").get<int>();
    if (s.d < FieldSpec::kMinDegree || s.d > FieldSpec::kMaxDegree) throw DomainError("degree out of range");
    for (const auto& e : p.at("elements_hex")) s.elements.push_back(parse_hex32(e.get<std::string>()));
    std::sort(s.elements.begin(), s.elements.end());
    s.params = hadamard_params(s.d);
    if (p.contains("provenance")) s.provenance = provenance_from_json(p.at("provenance"));
    std::optional<FieldSpec> spec;
    if (doc.contains("field_metadata") && doc.at("field_metadata").is_object()) {
      const Json& f = doc.at("field_metadata");
      auto modulus = std::stoull(f.at("modulus_hex").get<std::string>(), nullptr, 16);
      spec.emplace(s.d, modulus, parse_hex32(f.at("generator_hex").get<std::string>()));
    } else {
      spec.emplace(make_field(s.d));
    }
    return {std::move(s), *spec};
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed difference-set JSON: ") + e.what());
  }
}

RankMethod parse_method(const std::string& m) {
  if (m == "digit") return RankMethod::DigitCount;
  if (m == "gcd") return RankMethod::CirculantGcd;
  if (m == "dense") return RankMethod::DenseElimination;
  throw InputError("unknown method '" + m + "'");
}

Json recurrence_json(const Recurrence& r) {
  Json coeffs = Json::array();
  for (const auto& c : r.coeffs) coeffs.push_back(big_json(c));
  return {{"order", r.order()}, {"coeffs", coeffs}, {"constant", big_json(r.constant)}, {"start", r.start}};
}

Recurrence recurrence_from_json(const Json& j) {
  try {
    Recurrence r;
    for (const auto& c : j.at("coeffs")) r.coeffs.push_back(json_big(c));
    r.constant = j.contains("constant") ? json_big(j.at("constant")) : BigInt(0);
    r.start = j.value("start", r.order());
    if (r.coeffs.empty()) throw InputError("recurrence needs at least one coefficient");
    if (j.contains("order") && j.at("order").get<int>() != r.order())
      throw InputError("recurrence order disagrees with its coefficient count");
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed recurrence JSON: ") + e.what());
  }
}

// Certification window of the Glynn recurrences.
struct GlynnWindow {
  Recurrence rec;
  int P, Q;
};

GlynnWindow glynn_window(int type) {
  if (type == 2) return {{to_bigints(std::vector<long long>{1, -1, -3, 1, 1}), 1, 4}, 127, 128};
  return {{to_bigints(std::vector<long long>{1, -1, -1, -1, -1}), -1, 4}, 63, 64};
}

void require_type(int type) {
  if (type != 1 && type != 2) throw DomainError("glynn type must be 1 or 2");
}

std::string text_of(const Json& payload) {
  std::ostringstream os;
  if (!payload.is_object()) {
    os << payload.dump(2) << "\n";
    return os.str();
  }
  for (const auto& [key, value] : payload.items())
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-ranks of cyclic Hadamard difference sets from monomial hyperovals", "hyperrank"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  std::string command;
  Json params = Json::object();
  std::function<Output()> action;

  // Options shared by many subcommands.
  int d = 0, type = 0, dmax = 16, table_dmax = 25;
  std::uint64_t k = 0;
  std::string family, method, in_path, beta_hex, rec_arg, terms_arg;
  int u = 0, v = 0, index = 1, P = 0, Q = 0, max_order = 6, max_degree = 16, check_max = 21;
  std::uint64_t r = 0;
  bool quick = false, verbose = false;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Output()> f) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&, sub, parent, f] {
      command = parent->get_name() + " " + sub->get_name();
      action = f;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  // diffset
  CLI::App* g_diffset = group("diffset", "Construct and verify difference sets");
  auto* c_build = leaf(g_diffset, "build", "Construct a difference set", [&] {
    Output o;
    o.params = {{"family", family}, {"d", d}};
    FieldSpec spec = make_field(d);
    DiffSet s;
    if (family == "singer") {
      s = singer_set(spec);
    } else if (family == "qr") {
      s = qr_set(spec);
    } else if (family == "gmw") {
      s = gmw_set(u, v, r, spec);
      o.params["u"] = u, o.params["v"] = v, o.params["r"] = r;
    } else if (family == "tau") {
      s = tau_image(k, spec);
      o.params["k"] = k;
    } else {
      HyperovalFamily fam = parse_family(family);
      fam.translation_index = index;
      if (fam.kind == FamilyKind::Translation) o.params["i"] = index;
      s = tau_image(family_exponent(fam, d), spec);
    }
    o.field = spec;
    o.payload = diffset_json(s, family);
    return o;
  });
  c_build->add_option("--family", family, "regular|translation|segre|glynn1|glynn2|singer|qr|gmw|tau")->required();
  c_build->add_option("-d", d, "Field degree")->required();
  c_build->add_option("-k,--k", k, "Exponent (family tau)");
  c_build->add_option("-i,--i", index, "Translation index i (exponent 2^i)");
  c_build->add_option("--u", u, "GMW subfield degree");
  c_build->add_option("--v", v, "GMW extension degree");
  c_build->add_option("--r", r, "GMW exponent");

  auto* c_verify = leaf(g_diffset, "verify", "Verify a difference set read from JSON", [&] {
    auto [s, spec] = diffset_from_json(parse_json_text(read_source(in_path)));
    Output o;
    o.params = {{"in", in_path}, {"max_degree", max_degree}};
    o.field = spec;
    bool ok = s.elements.size() == s.params.k && verify_difference_set(s, spec, max_degree);
    o.payload = {{"d", s.d},
                 {"size", s.elements.size()},
                 {"params", {{"v", s.params.v}, {"k", s.params.k}, {"lambda", s.params.lambda}}},
                 {"valid", ok}};
    return o;
  });
  c_verify->add_option("--in", in_path, "JSON file, '-' for standard input")->required();
  c_verify->add_option("--max-degree", max_degree, "Largest d to verify");

  // rank
  CLI::App* g_rank = group("rank", "Two-ranks");
  auto* c_bk = leaf(g_rank, "bk", "Count digit-equation solutions B_k(d)", [&] {
    Output o;
    o.params = {{"k", k}, {"d", d}};
    o.field_degree = d;
    std::uint64_t b = count_digit_solutions(k, d);
    o.payload = {{"d", d}, {"k", k}, {"B", b}, {"A", b / static_cast<std::uint64_t>(d)}, {"method", method_name(RankMethod::DigitCount)}};
    return o;
  });
  c_bk->add_option("-k", k, "Exponent")->required();
  c_bk->add_option("-d", d, "Field degree")->required();

  method = "gcd";
  auto* c_rank_ds = leaf(g_rank, "diffset", "Rank of a difference set read from JSON", [&] {
    auto [s, spec] = diffset_from_json(parse_json_text(read_source(in_path)));
    Output o;
    o.params = {{"in", in_path}, {"method", method}};
    o.field = spec;
    RankReport rep = rank_diffset(s, spec, parse_method(method));
    Json kj = nullptr;
    if (auto* t = std::get_if<HyperovalTau>(&s.provenance)) kj = t->k;
    o.payload = {{"d", s.d},
                 {"k", kj},
                 {"B", rep.rank_complement},
                 {"A", rep.rank_complement / static_cast<std::uint64_t>(s.d)},
                 {"rank_set", rep.rank_set},
                 {"method", method_name(rep.method)}};
    return o;
  });
  c_rank_ds->add_option("--in", in_path, "JSON file, '-' for standard input")->required();
  c_rank_ds->add_option("--method", method, "digit|gcd|dense");

  // segre
  CLI::App* g_segre = group("segre", "Segre-exponent solutions");
  auto* c_strings = leaf(g_segre, "strings", "Block strings", [&] {
    Output o;
    o.params = {{"d", d}};
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& s : segre_strings(d)) {
      list.push_back({{"blocks", s.to_string()}, {"digits", s.digits()}, {"value", s.value()}});
      text << s.to_string() << "\n";
    }
    o.payload = {{"d", d}, {"count", list.size()}, {"strings", list}};
    o.text = text.str();
    return o;
  });
  c_strings->add_option("-d", d, "Odd degree")->required();
  auto* c_sols = leaf(g_segre, "solutions", "All solutions", [&] {
    Output o;
    o.params = {{"d", d}};
    Json list = Json::array();
    std::ostringstream csv;
    csv << "decimal,binary\n";
    for (auto a : segre_solutions(d)) {
      std::string bin;
      for (int i = d - 1; i >= 0; --i) bin += (a >> i & 1) ? '1' : '0';
      list.push_back({{"decimal", a}, {"binary", bin}});
      csv << a << "," << bin << "\n";
    }
    o.payload = {{"d", d}, {"count", list.size()}, {"solutions", list}};
    o.csv = csv.str();
    return o;
  });
  c_sols->add_option("-d", d, "Odd degree")->required();

  // glynn
  CLI::App* g_glynn = group("glynn", "Glynn-exponent transfer matrices");
  auto* c_gcount = leaf(g_glynn, "count", "Orbit count A(d)", [&] {
    require_type(type);
    Output o;
    o.params = {{"type", type}, {"d", d}};
    BigInt a = type == 2 ? glynn2_orbit_count(d) : glynn1_orbit_count(d);
    auto fam = type == 2 ? FamilyKind::GlynnII : FamilyKind::GlynnI;
    Json kj = nullptr;
    if (d <= 63) kj = family_exponent({fam}, d);
    o.payload = {{"type", type}, {"d", d}, {"k", kj}, {"A", big_json(a)}};
    if (d <= 63) o.payload["B"] = big_json(a * d);
    return o;
  });
  c_gcount->add_option("--type", type, "1 or 2")->required();
  c_gcount->add_option("-d", d, "Odd degree")->required();
  auto* c_gcert = leaf(g_glynn, "certify", "Certify the recurrence over its full window", [&] {
    require_type(type);
    Output o;
    o.params = {{"type", type}};
    GlynnWindow w = glynn_window(type);
    int first = glynn_first_degree(type);
    int bound = certification_bound(w.rec, w.P, w.Q);
    int last = first + 2 * bound;
    auto seq = glynn_orbit_sequence(type, last);
    bool ok = certify_recurrence(seq, w.rec, w.P, w.Q);
    o.payload = {{"type", type},
                 {"recurrence", recurrence_json(w.rec)},
                 {"index", "f_n = A(" + std::to_string(first) + " + 2n)"},
                 {"P", w.P},
                 {"Q", w.Q},
                 {"first_checked_d", first + 2 * w.rec.start},
                 {"last_checked_d", last},
                 {"certified", ok}};
    if (!ok) o.exit_code = kExitFailure;
    return o;
  });
  c_gcert->add_option("--type", type, "1 or 2")->required();
  auto* c_gexport = leaf(g_glynn, "export", "Transfer graph as JSON", [&] {
    require_type(type);
    Output o;
    o.params = {{"type", type}};
    const TransferGraph& g = type == 2 ? type2_graph() : type1_graph();
    Json vertices = Json::array();
    for (int i = 0; i < g.vertex_count; ++i) {
      Json label;
      if (type == 2) {
        auto t = TransferVertex2::from_index(i);
        label = {t.a1, t.a2, t.a3, t.b1, t.b2, t.c1, t.c2};
      } else {
        auto t = TransferVertex1::from_index(i);
        label = {t.a1, t.a2, t.b1, t.b2, t.b3, t.b4, t.c1, t.c2, t.c3, t.c4};
      }
      vertices.push_back({{"id", i}, {"label", label}, {"out", g.out[i]}});
    }
    o.payload = {{"type", type},
                 {"vertex_count", g.vertex_count},
                 {"edge_count", g.edge_count()},
                 {"parts", g.parts},
                 {"chain", g.chain},
                 {"boundary_length", g.boundary_length},
                 {"vertices", vertices}};
    return o;
  });
  c_gexport->add_option("--type", type, "1 or 2")->required();

  // seq
  CLI::App* g_seq = group("seq", "Recurrences");
  auto* c_scert = leaf(g_seq, "certify", "Check a recurrence up to its certification bound", [&] {
    Recurrence rec = recurrence_from_json(json_arg(rec_arg));
    auto terms = parse_terms(terms_arg);
    Output o;
    o.params = {{"recurrence", recurrence_json(rec)}, {"terms", terms.size()}, {"P", P}, {"Q", Q}};
    int bound = certification_bound(rec, P, Q);
    bool ok = certify_recurrence(terms, rec, P, Q);
    o.payload = {{"certified", ok}, {"checked_from", rec.start}, {"checked_to", bound}};
    return o;
  });
  c_scert->add_option("--rec", rec_arg, "Recurrence JSON (inline or file)")->required();
  c_scert->add_option("--terms", terms_arg, "Comma-separated terms or a file")->required();
  c_scert->add_option("--P", P, "Numerator degree bound")->required();
  c_scert->add_option("--Q", Q, "Denominator degree bound")->required();
  auto* c_guess = leaf(g_seq, "guess", "Guess a minimal-order integer recurrence", [&] {
    auto terms = parse_terms(terms_arg);
    Output o;
    o.params = {{"terms", terms.size()}, {"max_order", max_order}};
    auto rec = guess_recurrence(terms, max_order);
    o.payload = {{"found", rec.has_value()}, {"recurrence", rec ? recurrence_json(*rec) : Json(nullptr)}};
    if (rec) o.text = recurrence_to_string(*rec) + "\n";
    return o;
  });
  c_guess->add_option("--terms", terms_arg, "Comma-separated terms or a file")->required();
  c_guess->add_option("--max-order", max_order, "Largest order tried");

  // code
  CLI::App* g_code = group("code", "Cyclic code of the Segre-exponent set");
  auto* c_info = leaf(g_code, "info", "Length, dimension, generator", [&] {
    Output o;
    o.params = {{"d", d}};
    o.field_degree = d;
    CyclicCodeInfo info = code_info(d);
    o.payload = {{"d", d},
                 {"n", info.n},
                 {"dimension", info.dimension},
                 {"generator_degree", info.generator.degree()},
                 {"generator_hex", info.generator.to_hex()},
                 {"nonzeros_match_prediction", info.nonzero_exponents == predicted_nonzeros(d)}};
    return o;
  });
  c_info->add_option("-d", d, "Odd degree")->required();
  auto* c_bch = leaf(g_code, "bch", "Run of consecutive zeros", [&] {
    Output o;
    o.params = {{"d", d}};
    o.field_degree = d;
    auto t = bch_run(d);
    o.payload = {{"d", d}, {"run", t}, {"distance_bound", t + 1}};
    return o;
  });
  c_bch->add_option("-d", d, "Odd degree")->required();
  auto* c_sextic = leaf(g_code, "sextic", "Trace criterion for x^6 + x + beta", [&] {
    Output o;
    o.params = {{"d", d}, {"beta", beta_hex}};
    FieldSpec spec = make_field(d);
    o.field = spec;
    FieldElem beta{parse_hex32(beta_hex)};
    if (!spec.contains(beta)) throw DomainError("beta is not a field element");
    bool crit = sextic_solvable(spec, beta);
    Json roots = nullptr;
    if (d <= 20) roots = sextic_root_count(spec, beta);
    o.payload = {{"d", d}, {"beta_hex", to_hex(beta.bits)}, {"criterion", crit}, {"roots", roots}};
    return o;
  });
  c_sextic->add_option("-d", d, "Degree")->required();
  c_sextic->add_option("--beta", beta_hex, "Field element, hex")->required();

  // circ
  CLI::App* g_circ = group("circ", "Count circulants");
  std::string circ_method = "gcd";
  auto* c_crank = leaf(g_circ, "rank", "Solution count or circulant ranks", [&] {
    Output o;
    o.params = {{"k", k}, {"d", d}, {"method", circ_method}};
    o.field_degree = d;
    o.payload = {{"k", k}, {"d", d}, {"method", circ_method}};
    if (circ_method == "count") {
      o.payload["R"] = count_circulant_solutions(k, d);
    } else if (circ_method == "gcd") {
      o.payload["rank_m"] = rank_count_matrix(k, d);
      o.payload["rank_n"] = rank_support_matrix(k, d);
    } else if (circ_method == "dense") {
      o.payload["rank_m"] = rank_count_matrix_dense(k, d);
      o.payload["rank_n"] = rank_support_matrix_dense(k, d);
    } else {
      throw InputError("unknown method '" + circ_method + "'");
    }
    return o;
  });
  c_crank->add_option("-k", k, "Exponent")->required();
  c_crank->add_option("-d", d, "Degree")->required();
  c_crank->add_option("--method", circ_method, "count|gcd|dense");
  auto* c_gf = leaf(g_circ, "gfcheck", "Compare counts, ranks, words and the generating function", [&] {
    Output o;
    o.params = {{"k", k}, {"dmax", dmax}};
    if (dmax < 2) throw DomainError("dmax must be at least 2");
    auto series = expand_series(circulant_gf(k), dmax);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "d,count,rank_m,words,series\n";
    bool all = true;
    for (int dd = 2; dd <= dmax; ++dd) {
      auto c = count_circulant_solutions(k, dd);
      auto m = rank_count_matrix(k, dd);
      auto w = word_count(k, dd);
      bool agree = c == m && c == w && big_from_u64(c) == series[dd];
      all = all && agree;
      rows.push_back({{"d", dd}, {"count", c}, {"rank_m", m}, {"words", w}, {"series", big_json(series[dd])}, {"agree", agree}});
      csv << dd << "," << c << "," << m << "," << w << "," << series[dd] << "\n";
    }
    o.payload = {{"k", k}, {"rows", rows}, {"all_agree", all}};
    o.csv = csv.str();
    return o;
  });
  c_gf->add_option("-k", k, "Exponent, 3..9")->required();
  c_gf->add_option("--dmax", dmax, "Largest degree");
  auto* c_prof = leaf(g_circ, "profile", "Root-count profile of x^k + x^(k-1) + c", [&] {
    Output o;
    o.params = {{"k", k}, {"d", d}};
    o.field_degree = d;
    Json prof = Json::object();
    for (const auto& [roots, count] : root_profile(k, d)) prof[std::to_string(roots)] = count;
    o.payload = {{"k", k}, {"d", d}, {"profile", prof}};
    return o;
  });
  c_prof->add_option("-k", k, "Exponent")->required();
  c_prof->add_option("-d", d, "Degree")->required();

  // report
  CLI::App* g_report = group("report", "Tables");
  auto* c_table = leaf(g_report, "table1", "Orbit counts for the three exponents", [&] {
    Output o;
    o.params = {{"dmax", table_dmax}, {"check_max", check_max}};
    auto rows = rank_table(table_dmax, check_max);
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& row : rows) {
      list.push_back({{"d", row.d},
                      {"A6", big_json(row.a6)},
                      {"AglynnI", big_json(row.a_glynn1)},
                      {"AglynnII", big_json(row.a_glynn2)},
                      {"digit_checked", row.digit_checked}});
      text << row.d << "\t" << row.a6 << "\t" << row.a_glynn1 << "\t" << row.a_glynn2 << "\n";
    }
    o.payload = {{"rows", list}};
    o.csv = rank_table_csv(rows);
    o.text = "d\tA6\tAglynnI\tAglynnII\n" + text.str();
    return o;
  });
  c_table->add_option("--dmax", table_dmax, "Largest odd degree (<= 31)");
  c_table->add_option("--check-max", check_max, "Cross-check by digit counting up to this degree");
  auto* c_ineq = leaf(g_report, "inequiv", "Rank separation of the families", [&] {
    Output o;
    o.params = {{"d", d}};
    o.field_degree = d;
    InequivalenceReport rep = inequivalence_report(d);
    Json entries = Json::array();
    for (const auto& e : rep.entries)
      entries.push_back({{"family", e.family},
                         {"params", e.params},
                         {"complement_rank", e.complement_rank},
                         {"expected", e.expected ? Json(*e.expected) : Json(nullptr)}});
    Json inconclusive = Json::array();
    for (const auto& [a, b] : rep.inconclusive) inconclusive.push_back({a, b});
    o.payload = {{"d", d}, {"entries", entries}, {"inconclusive", inconclusive}};
    return o;
  });
  c_ineq->add_option("-d", d, "Odd degree")->required();
  leaf(g_report, "fibcheck", "Fibonacci congruences", [&] {
    Output o;
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : fibonacci_mod_checks()) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      all = all && c.passed;
    }
    o.payload = {{"checks", checks}, {"all_passed", all}};
    if (!all) o.exit_code = kExitFailure;
    return o;
  });

  // selftest prints its own report.
  CLI::App* c_self = app.add_subcommand("selftest", "Run the acceptance suite");
  c_self->add_flag("--quick", quick, "Restrict to d <= 15");
  c_self->add_flag("-v,--verbose", verbose, "List every check");
  c_self->callback([&] { command = "selftest"; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (command == "selftest") {
    AcceptanceOptions opts;
    opts.quick = quick;
    int failed = print_acceptance(run_acceptance(opts), out, verbose);
    return failed ? kExitFailure : kExitOk;
  }

  if (format.empty()) format = command == "report table1" ? "csv" : "json";
  try {
    Output o = action();
    if (format == "csv") {
      if (!o.csv) {
        err << "error: csv output is available for table commands only\n";
        return kExitUsage;
      }
      out << *o.csv;
    } else if (format == "text") {
      out << (o.text ? *o.text : text_of(o.payload));
    } else {
      Json fm = nullptr;
      if (o.field) {
        fm = field_json(*o.field);
      } else if (o.field_degree && *o.field_degree >= FieldSpec::kMinDegree && *o.field_degree <= FieldSpec::kMaxDegree) {
        fm = field_json(make_field(*o.field_degree));
      }
      Json env = {{"schema_version", "1"}, {"command", command}, {"params", o.params}, {"field_metadata", fm}, {"payload", o.payload}};
      out << env.dump(2) << "\n";
    }
    return o.exit_code;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace hyperrank
