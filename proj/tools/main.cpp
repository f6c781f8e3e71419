#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lindeg/arcs.hpp"
#include "lindeg/cells.hpp"
#include "lindeg/error.hpp"
#include "lindeg/homalg.hpp"
#include "lindeg/json_io.hpp"
#include "lindeg/loci.hpp"
#include "lindeg/named.hpp"
#include "lindeg/pbw.hpp"
#include "suites/suites.hpp"

using namespace lindeg;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& p : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != p.size()) invalid("\"" + text + "\" is not a comma-separated integer list");
    out.push_back(v);
  }
  return out;
}

/// --named, --n and --rep, shared by the commands that take a representation.
struct Input {
  std::string named;
  std::string rep;
  int n = 0;

  void attach(CLI::App* cmd) {
    auto* named_opt = cmd->add_option("--named", named, "M0, M1, M2, Mi:<projection list> or Ma:<tuple a>");
    cmd->add_option("--n", n, "Number of vertices of the equioriented quiver")->check(CLI::PositiveNumber);
    auto* rep_opt = cmd->add_option("--rep", rep, "JSON document, path to one, or named:<kind>:<n>");
    named_opt->excludes(rep_opt);
  }

  static IsoClass from_named(const std::string& spec, int n) {
    if (n < 1) invalid("--named needs --n");
    const auto colon = spec.find(':');
    const auto kind = spec.substr(0, colon);
    const auto params = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    if (kind == "M0" && colon == std::string::npos) return m_zero(n);
    if (kind == "M1" && colon == std::string::npos) return m_one(n);
    if (kind == "M2" && colon == std::string::npos) return m_two(n);
    if (kind == "Mi") return named_rep(NamedKind::Mproj, n, int_list(params));
    if (kind == "Ma") return named_rep(NamedKind::Ma, n, int_list(params));
    invalid("unknown named representation \"" + spec + "\"");
  }

  Json document() const {
    std::string text = rep;
    if (!text.empty() && text.front() != '{') {
      std::ifstream file(text);
      if (!file) invalid("cannot read \"" + text + "\"");
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      invalid(std::string("malformed JSON: ") + e.what());
    }
  }

  bool rep_is_named() const { return rep.rfind("named:", 0) == 0; }

  IsoClass named_from_rep() const {
    const auto rest = rep.substr(6);
    const auto last = rest.rfind(':');
    if (last == std::string::npos) invalid("--rep named:<kind>:<n>");
    const auto count = int_list(rest.substr(last + 1));
    if (count.size() != 1) invalid("--rep named:<kind>:<n>");
    return from_named(rest.substr(0, last), count[0]);
  }

  /// The rank tuple of the input; matrix representations are read over
  /// their own field, rank tuples are taken as given.
  RankTuple ranks() const {
    if (!named.empty()) return ranks_from_iso(from_named(named, n));
    if (rep.empty()) invalid("one of --named or --rep is required");
    if (rep_is_named()) return ranks_from_iso(named_from_rep());
    const auto doc = document();
    if (doc.contains("maps")) return rank_tuple(matrix_rep_from_json(doc));
    if (doc.contains("r")) return rank_tuple_from_json(doc);
    return ranks_from_iso(iso_class_from_json(doc));
  }

  IsoClass iso() const {
    if (!named.empty()) return from_named(named, n);
    if (rep.empty()) invalid("one of --named or --rep is required");
    if (rep_is_named()) return named_from_rep();
    const auto doc = document();
    if (doc.contains("m")) return iso_class_from_json(doc);
    if (doc.contains("maps")) return iso_from_ranks(rank_tuple(matrix_rep_from_json(doc)));
    return iso_from_ranks(rank_tuple_from_json(doc));
  }
};

DimVector dims_or_ramp(const std::vector<int>& e, int n) {
  if (e.empty()) return DimVector::ramp(n);
  DimVector d(e);
  if (d.n() != n) throw Error(ErrorCode::LengthMismatch, "--e needs " + std::to_string(n) + " entries");
  d.validate();
  return d;
}

Json coeffs(const std::vector<std::uint64_t>& c) { return {{"coeffs", c}}; }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Matrix random_lower(std::mt19937_64& rng, std::size_t size) {
  Matrix x(size, size, 0);
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = 0; q < p; ++q) x(p, q) = random_rational(rng);
  }
  return x;
}

std::vector<Rational> rationals(const std::vector<std::string>& text) {
  std::vector<Rational> out;
  for (const auto& t : text) out.push_back(parse_rational(t));
  return out;
}

Json ses_json(const SesReport& r) {
  Json j = {{"dims_add", r.dims_add},
            {"embeds", r.embeds},
            {"quotient_matches", r.quotient_matches},
            {"hom", r.hom},
            {"hom_matches", r.hom_matches},
            {"ok", r.ok()}};
  j["generic_quotient"] = r.generic_quotient ? to_json(*r.generic_quotient) : Json(nullptr);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

int emit(const Json& j, int code = 0) {
  std::cout << dump(j) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degenerations of the flag variety of type A as quiver Grassmannians"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::function<Json()> action;
  int exit_code = 0;
  Input in;
  std::vector<int> e_list, i_list, lambda_ints, starts;
  std::vector<std::string> lambda_text, diag_text;
  int n = 0, samples = 20;
  std::uint64_t p = 2, seed = 1, budget = CountOptions{}.budget;
  unsigned jobs = 1;
  bool regular = false, list = false, check = false, triple = false, timings = false;
  std::string suite = "all";

  auto seq_of = [&](int size) {
    ProjSeq seq(size, i_list);
    seq.validate();
    return seq;
  };

  auto* classify_cmd = app.add_subcommand("classify", "Flat, irreducible, normal and PBW loci membership of an orbit, with a witness");
  in.attach(classify_cmd);
  classify_cmd->callback([&] { action = [&] { return to_json(classify(in.ranks())); }; });

  auto* orbits_cmd = app.add_subcommand("orbits", "Census of orbits in the flat locus: realizable rank tuples vs label patterns");
  orbits_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(1, 9));
  orbits_cmd->add_flag("--list", list, "Also list the rank tuples");
  orbits_cmd->callback([&] {
    action = [&] {
      const auto census = flat_orbit_census(n);
      Json j = {{"n", n}, {"rank_count", census.rank_count}, {"pcal_count", census.pcal_count}, {"agree", census.agree()}};
      if (list) {
        j["rank_tuples"] = Json::array();
        for (const auto& rt : flat_rank_tuples(n)) j["rank_tuples"].push_back(to_json(rt));
      }
      return j;
    };
  });

  auto* rhymes_cmd = app.add_subcommand("rhymes", "Broken rhyme schemes of length n-1 and the orbits they index");
  rhymes_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(1, 12));
  rhymes_cmd->add_flag("--regular", regular, "Only regular schemes, with their projection sequences");
  rhymes_cmd->callback([&] {
    action = [&] {
      Json schemes = Json::array();
      for (const auto& s : rhyme_enumerate(n)) {
        if (regular && !is_regular(s)) continue;
        Json entry = {{"scheme", s.to_string()}, {"regular", is_regular(s)}};
        if (is_regular(s)) entry["i"] = dseq_of_scheme(s).seq;
        schemes.push_back(std::move(entry));
      }
      return Json{{"n", n}, {"count", schemes.size()}, {"schemes", std::move(schemes)}};
    };
  });

  auto* arcs_cmd = app.add_subcommand("arcs", "Non-crossing arc diagrams with N_A, Q_A and the dual diagram");
  arcs_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(1, 9));
  arcs_cmd->add_flag("--check", check, "Verify the exact sequence and the desingularization tower per diagram");
  arcs_cmd->add_option("--seed", seed, "Seed for the random homomorphisms and tower points");
  arcs_cmd->callback([&] {
    action = [&] {
      Json diagrams = Json::array();
      for (const auto& a : enumerate_arcs(n)) {
        Json entry = {{"arcs", to_json(a)["arcs"]}, {"n_a", to_json(n_of_arcs(a))}, {"q_a", to_json(q_of_arcs(a))},
                      {"dual", to_json(dual(a))["arcs"]}};
        if (check) {
          entry["ses"] = ses_json(verify_ses(a, seed));
          const auto d = desing_dims(a, seed);
          entry["desing"] = {{"fiber_dims", d.fiber_dims}, {"total", d.total}, {"samples", d.samples},
                             {"closed_form_agrees", d.closed_form_agrees}};
        }
        diagrams.push_back(std::move(entry));
      }
      Json j = {{"n", n}, {"count", diagrams.size()}, {"diagrams", std::move(diagrams)}};
      if (check) j["seed"] = seed;
      return j;
    };
  });

  auto* components_cmd = app.add_subcommand("components", "Irreducible components of the quiver Grassmannian Gr_(1..n)(M)");
  in.attach(components_cmd);
  components_cmd->callback([&] {
    action = [&] {
      const auto rep = flag_components(in.iso());
      Json comps = Json::array();
      for (const auto& c : rep.components) comps.push_back(to_json(c.iso));
      return Json{{"min_dim", rep.is_min_dim}, {"count", comps.size()}, {"components", std::move(comps)},
                  {"candidates", rep.candidates}};
    };
  });

  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial of Gr_e(M) from the cellular decomposition");
  in.attach(poincare_cmd);
  poincare_cmd->add_option("--e", e_list, "Dimension vector e (default 1..n)")->delimiter(',');
  poincare_cmd->callback([&] {
    action = [&] {
      const auto iso = in.iso();
      return coeffs(poincare(iso, dims_or_ramp(e_list, iso.n())));
    };
  });

  auto* count_cmd = app.add_subcommand("count", "Number of F_p-points of Gr_e(M), by enumeration");
  in.attach(count_cmd);
  count_cmd->add_option("--e", e_list, "Dimension vector e (default 1..n)")->delimiter(',');
  count_cmd->add_option("--p", p, "Prime field size")->required();
  count_cmd->add_option("--jobs", jobs, "Worker cap")->check(CLI::PositiveNumber);
  count_cmd->add_option("--budget", budget, "Maximum subspaces visited");
  count_cmd->callback([&] {
    action = [&] {
      const auto iso = in.iso();
      CountOptions options;
      options.jobs = jobs;
      options.budget = budget;
      return Json{{"count", count_points_fq(iso, dims_or_ramp(e_list, iso.n()), p, options)}};
    };
  });

  auto* tangent_cmd = app.add_subcommand("tangent", "Cell and tangent space dimensions at torus fixed points");
  in.attach(tangent_cmd);
  tangent_cmd->add_option("--starts", starts, "Fixed point as segment start columns (0 = absent)")->delimiter(',');
  tangent_cmd->add_option("--e", e_list, "List every fixed point of Gr_e(M) (default 1..n)")->delimiter(',');
  tangent_cmd->callback([&] {
    action = [&] {
      const auto iso = in.iso();
      const auto lay = layout(iso);
      auto describe = [&](const FixedPoint& fp) {
        return Json{{"starts", fp.starts},
                    {"dims", fixed_point_dims(lay, fp).d},
                    {"cell_dim", cell_dim(lay, fp)},
                    {"tangent_dim", tangent_dim(lay, fp)},
                    {"sub", to_json(sub_class(lay, fp))},
                    {"quotient", to_json(quotient_class(lay, fp))}};
      };
      Json segments = Json::array();
      for (const auto& s : lay.segments) segments.push_back({s.left, s.right});
      if (!starts.empty()) {
        const FixedPoint fp{starts};
        validate(lay, fp);
        auto j = describe(fp);
        j["layout"] = std::move(segments);
        return j;
      }
      Json points = Json::array();
      for (const auto& fp : fixed_points(iso, dims_or_ramp(e_list, iso.n()))) points.push_back(describe(fp));
      return Json{{"layout", std::move(segments)}, {"count", points.size()}, {"fixed_points", std::move(points)}};
    };
  });

  auto* schubert_cmd = app.add_subcommand("schubert", "Weyl group element w_i of a projection sequence, with h and l");
  schubert_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  schubert_cmd->add_option("--i", i_list, "Projection sequence i_1 < ... < i_k")->delimiter(',');
  schubert_cmd->callback([&] {
    action = [&] {
      const auto seq = seq_of(n);
      const auto w = weyl_word(seq);
      return Json{{"h", h_vector(seq)},           {"ell", ell_vector(seq)},
                  {"word", w.word},               {"length", w.word.size()},
                  {"reduced", w.reduced()},       {"N", w.N},
                  {"M", to_json(m_of_projections(seq))}};
    };
  });

  auto* demazure_cmd = app.add_subcommand("demazure-check", "Demazure module dimension for w_i against the Weyl module dimension");
  demazure_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  demazure_cmd->add_option("--i", i_list, "Projection sequence")->delimiter(',');
  demazure_cmd->add_option("--lambda", lambda_ints, "Dominant weight of sl_(n+1), n coefficients")->required()->delimiter(',');
  demazure_cmd->callback([&] {
    action = [&] {
      const auto seq = seq_of(n);
      const auto d = demazure_dim(weyl_word(seq), psi_weight(seq, lambda_ints));
      const auto v = weyl_dim(n + 1, lambda_ints);
      return Json{{"demazure", d}, {"weyl", v}, {"equal", d == v}};
    };
  });

  auto* slice_cmd = app.add_subcommand("slice", "Point of the transversal slice to the PBW orbit, with its loci");
  slice_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(2, 64));
  auto* lambda_opt = slice_cmd->add_option("--lambda", lambda_text, "lambda_(i,j), 1 <= i <= j <= n-1, row-major")->delimiter(',');
  auto* diag_opt = slice_cmd->add_option("--diag", diag_text, "lambda_(i,i) only")->delimiter(',');
  lambda_opt->excludes(diag_opt);
  slice_cmd->callback([&] {
    action = [&] {
      MatrixRep rep;
      if (!lambda_text.empty()) {
        SliceParams lambda(n - 1, false, Rational(0));
        if (lambda.data().size() != lambda_text.size()) {
          throw Error(ErrorCode::ShapeMismatch, "--lambda needs " + std::to_string(lambda.data().size()) + " entries");
        }
        lambda.data() = rationals(lambda_text);
        rep = slice_rep(n, lambda);
      } else {
        rep = slice_pbw(n, rationals(diag_text));
      }
      const auto rt = rank_tuple(rep);
      return Json{{"rep", to_json(rep)}, {"ranks", to_json(rt)}, {"locus", to_json(classify(rt))}};
    };
  });

  auto* gamma_cmd = app.add_subcommand("gamma-check", "Automorphisms of slice points from the unipotent group scheme");
  gamma_cmd->add_option("--n", n, "Number of vertices")->check(CLI::Range(2, 32));
  gamma_cmd->add_option("--diag", diag_text, "lambda_(i,i) of a PBW slice point")->delimiter(',');
  gamma_cmd->add_flag("--triple", triple, "Check the solvable n = 3 triple instead");
  gamma_cmd->add_option("--lambda", lambda_text, "lambda11,lambda12,lambda22 for --triple")->delimiter(',');
  gamma_cmd->add_option("--samples", samples, "Random x samples")->check(CLI::Range(1, 100000));
  gamma_cmd->add_option("--seed", seed, "Seed for x");
  gamma_cmd->callback([&] {
    action = [&] {
      std::mt19937_64 rng(seed);
      if (triple) {
        if (lambda_text.size() != 3) throw Error(ErrorCode::ShapeMismatch, "--triple needs --lambda l11,l12,l22");
        SliceParams lambda(2, false, Rational(0));
        lambda.data() = rationals(lambda_text);
        const auto f = slice_rep(3, lambda);
        int checked = 0, skipped = 0;
        bool all = true;
        for (int s = 0; s < samples; ++s) {
          const auto g = solvable_triple_n3(lambda, random_lower(rng, 4));
          bool invertible = true;
          for (const auto& m : g) invertible = invertible && rank(m) == 4;
          if (!invertible) {
            ++skipped;
            continue;
          }
          all = all && check_automorphism(g, f);
          ++checked;
        }
        return Json{{"automorphism", all}, {"samples", checked}, {"skipped", skipped}, {"seed", seed}};
      }
      if (n < 2) throw Error(ErrorCode::InvalidParams, "--n is required without --triple");
      const auto diag = diag_text.empty() ? std::vector<Rational>(static_cast<std::size_t>(n - 1), Rational(0))
                                          : rationals(diag_text);
      const auto f = slice_pbw(n, diag);
      bool all = true;
      for (int s = 0; s < samples; ++s) {
        all = all && check_automorphism(gamma_pbw(n, diag, random_lower(rng, static_cast<std::size_t>(n + 1))), f);
      }
      return Json{{"automorphism", all},
                  {"samples", samples},
                  {"seed", seed},
                  {"stabilizer_dim", standard_flag_stabilizer_dim(n, diag)}};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run acceptance suites and report pass/fail per criterion");
  verify_cmd->add_option("--suite", suite, "all, ac1..ac12 or a criterion name");
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
  verify_cmd->add_option("--jobs", jobs, "Worker cap")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timings", timings, "Include wall-clock seconds");
  verify_cmd->callback([&] {
    action = [&] {
      Json results = Json::array();
      bool all = true;
      for (const auto& c : suites::select(suite)) {
        const auto r = suites::run(c, seed, jobs);
        Json entry = {{"id", r.id},           {"name", r.name},     {"pass", r.pass},
                      {"in_time", r.in_time}, {"limit_seconds", r.limit_seconds}, {"detail", r.detail}};
        if (timings) entry["seconds"] = r.seconds;
        results.push_back(std::move(entry));
        all = all && r.ok();
      }
      if (!all) exit_code = 1;
      return Json{{"suite", suite}, {"seed", seed}, {"pass", all}, {"results", std::move(results)}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit({{"error", "UsageError"}, {"detail", e.what()}}, 2);
  }

  try {
    const auto out = action();
    return emit(out, exit_code);
  } catch (const Error& e) {
    return emit({{"error", std::string(to_string(e.code()))}, {"detail", e.what()}}, 1);
  } catch (const std::exception& e) {
    return emit({{"error", "InternalError"}, {"detail", e.what()}}, 1);
  }
}
