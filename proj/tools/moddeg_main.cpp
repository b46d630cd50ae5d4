#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "moddeg/pipeline.hpp"
#include "moddeg/problem_file.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string format = "text";
  std::string field;  // "", "q" or "p"
  std::uint64_t seed = 1;
  bool seed_given = false;
  int trials = 3;
  bool trials_given = false;
  int degree_cap = 50;
  bool cap_given = false;
};

moddeg::PipelineOptions pipeline_options(const moddeg::ProblemFile& pf,
                                         const Options& opt) {
  moddeg::PipelineOptions p;
  p.seed = opt.seed_given ? opt.seed : pf.seed.value_or(opt.seed);
  p.trials = opt.trials_given ? opt.trials : pf.trials.value_or(opt.trials);
  p.degree_cap =
      opt.cap_given ? opt.degree_cap : pf.degree_cap.value_or(opt.degree_cap);
  return p;
}

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json gens_json(const moddeg::MonomialSubmodule& U) {
  auto arr = ordered_json::array();
  for (const auto& g : U.gens()) arr.push_back(g.str(U.ring(), U.shape()));
  return arr;
}

std::string report_text(const moddeg::DegreeReport& r) {
  std::ostringstream os;
  os << "structure:      " << r.structure << "\n";
  if (r.zero_module) {
    os << "zero module (all degree values reported as 0)\n";
  } else {
    os << "dim:            " << r.dim << "\n"
       << "deg:            " << r.deg << "\n"
       << "adeg:           " << r.adeg << "\n"
       << "sdeg:           " << r.sdeg << "\n"
       << "hdeg:           " << r.hdeg << "\n"
       << "depth positive: " << (r.depth_positive ? "yes" : "no") << "\n";
  }
  os << "ext degrees:    [";
  for (std::size_t i = 0; i < r.ext_degrees.size(); ++i)
    os << (i ? ", " : "") << r.ext_degrees[i];
  os << "]\n";
  for (const auto& d : r.disclaimers) os << "note: " << d << "\n";
  return os.str();
}

/// Borel-type monomial module of the input, computing gin when needed.
template <class F>
moddeg::MonomialSubmodule borel_model(const F& field,
                                      const moddeg::ProblemFile& pf,
                                      const moddeg::PipelineOptions& popts,
                                      bool& via_gin) {
  auto elems = moddeg::problem_elements(field, pf, moddeg::TermOrder::RevlexModule);
  auto mono = moddeg::as_monomial_submodule<F>(pf.ring, pf.shape, elems);
  if (mono && mono->is_borel_type()) {
    via_gin = false;
    return *mono;
  }
  via_gin = true;
  moddeg::GinOptions gopts;
  gopts.trials = popts.trials;
  gopts.seed = popts.seed;
  return moddeg::gin(field, pf.ring, elems, gopts);
}

template <class F>
int cmd_degrees(const F& field, const moddeg::ProblemFile& pf,
                const Options& opt) {
  auto elems = moddeg::problem_elements(field, pf, moddeg::TermOrder::RevlexModule);
  moddeg::DegreeReport r =
      moddeg::full_report(field, pf.ring, pf.shape, elems,
                          pipeline_options(pf, opt));
  emit(opt, moddeg::report_to_json(r), report_text(r));
  auto check = moddeg::check_degree_chain(r);
  if (!check.ok) {
    std::cerr << "degree chain violated: " << check.violation << "\n";
    return 2;
  }
  return 0;
}

template <class F>
int cmd_chain(const F& field, const moddeg::ProblemFile& pf,
              const Options& opt) {
  bool via_gin = false;
  auto popts = pipeline_options(pf, opt);
  moddeg::MonomialSubmodule U = borel_model(field, pf, popts, via_gin);
  moddeg::SaturationChain chain = moddeg::saturation_chain(U);

  ordered_json j;
  j["structure"] = via_gin ? "via-gin" : "borel-monomial";
  auto stages = ordered_json::array();
  std::ostringstream os;
  os << (via_gin ? "chain of F/gin(U):\n" : "chain of F/U:\n");
  moddeg::Int sdeg = 0;
  for (std::size_t i = 0; i < chain.stages.size(); ++i) {
    const auto& st = chain.stages[i];
    ordered_json sj;
    sj["i"] = i;
    sj["U"] = gens_json(st.U);
    sj["V_sat"] = gens_json(st.Vsat);
    sj["lambda"] = moddeg::to_ll(st.lambda);
    stages.push_back(sj);
    os << "stage " << i << ": lambda_" << i << " = " << st.lambda
       << "  (deg Ext^" << (U.nvars() - static_cast<int>(i)) << ")\n"
       << "  U_" << i << " = " << st.U.str() << "\n"
       << "  V_" << i << "^sat = " << st.Vsat.str() << "\n";
    sdeg += st.lambda;
  }
  j["stages"] = stages;
  j["sdeg"] = moddeg::to_ll(sdeg);
  os << "sdeg = " << sdeg << "\n";
  emit(opt, j, os.str());
  return 0;
}

template <class F>
int cmd_gin(const F& field, const moddeg::ProblemFile& pf, const Options& opt) {
  auto elems = moddeg::problem_elements(field, pf, moddeg::TermOrder::RevlexModule);
  auto popts = pipeline_options(pf, opt);
  moddeg::GinOptions gopts;
  gopts.trials = popts.trials;
  gopts.seed = popts.seed;
  moddeg::MonomialSubmodule G = moddeg::gin(field, pf.ring, elems, gopts);

  ordered_json j;
  j["gens"] = gens_json(G);
  emit(opt, j, moddeg::format_problem(moddeg::problem_from_submodule(G)));
  return 0;
}

template <class F>
int cmd_lex(const F& field, const moddeg::ProblemFile& pf, const Options& opt) {
  auto elems = moddeg::problem_elements(field, pf, moddeg::TermOrder::RevlexModule);
  auto popts = pipeline_options(pf, opt);
  auto mono = moddeg::as_monomial_submodule<F>(pf.ring, pf.shape, elems);
  moddeg::MonomialSubmodule U =
      mono ? *mono
           : moddeg::initial_module(moddeg::buchberger(
                 field, pf.ring, elems, moddeg::TermOrder::RevlexModule));
  moddeg::MonomialSubmodule L = moddeg::lex_module(U, popts.degree_cap);

  ordered_json j;
  j["gens"] = gens_json(L);
  emit(opt, j, moddeg::format_problem(moddeg::problem_from_submodule(L)));
  return 0;
}

template <class F>
int cmd_hilbert(const F& field, const moddeg::ProblemFile& pf,
                const Options& opt) {
  auto elems = moddeg::problem_elements(field, pf, moddeg::TermOrder::RevlexModule);
  auto mono = moddeg::as_monomial_submodule<F>(pf.ring, pf.shape, elems);
  moddeg::MonomialSubmodule U =
      mono ? *mono
           : moddeg::initial_module(moddeg::buchberger(
                 field, pf.ring, elems, moddeg::TermOrder::RevlexModule));
  moddeg::HilbertSeries h = moddeg::hilbert_series(U);
  auto dd = moddeg::dimension_and_degree(h);
  moddeg::IntPoly red = moddeg::reduced_numerator(h);

  auto poly_json = [](const moddeg::IntPoly& p) {
    ordered_json pj;
    pj["offset"] = p.is_zero() ? 0 : p.low();
    auto arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(moddeg::to_ll(c));
    pj["coeffs"] = arr;
    return pj;
  };
  ordered_json j;
  j["nvars"] = h.nvars;
  j["numerator"] = poly_json(h.numerator);
  j["reduced_numerator"] = poly_json(red);
  j["zero"] = dd.is_zero;
  j["dim"] = dd.dim;
  j["deg"] = dd.is_zero ? 0 : moddeg::to_ll(dd.deg);
  auto values = moddeg::hilbert_function(h, U.shape().min_twist(),
                                         U.shape().min_twist() + 9);
  auto varr = ordered_json::array();
  for (const auto& v : values) varr.push_back(moddeg::to_ll(v));
  j["values"] = varr;

  std::ostringstream os;
  os << "numerator (over (1-t)^" << h.nvars << "):";
  if (h.numerator.is_zero()) {
    os << " 0";
  } else {
    for (long long e = h.numerator.low(); e <= h.numerator.high(); ++e)
      os << " " << h.numerator.coeff(e) << "*t^" << e;
  }
  os << "\n";
  if (dd.is_zero)
    os << "F/U = 0\n";
  else
    os << "dim = " << dd.dim << ", deg = " << dd.deg << "\n";
  os << "H(" << U.shape().min_twist() << ".." << U.shape().min_twist() + 9
     << ") =";
  for (const auto& v : values) os << " " << v;
  os << "\n";
  emit(opt, j, os.str());
  return 0;
}

template <class F>
int cmd_bounds(const F& field, const moddeg::ProblemFile& pf,
               const Options& opt) {
  auto elems = moddeg::problem_elements(field, pf, moddeg::TermOrder::RevlexModule);
  auto mono = moddeg::as_monomial_submodule<F>(pf.ring, pf.shape, elems);
  if (!mono)
    moddeg::fail("precondition",
                 "bounds requires a monomial Borel-type input");
  auto cmp = moddeg::compare_gin_lex(field, *mono, pipeline_options(pf, opt));

  auto chain_direct = moddeg::check_degree_chain(cmp.direct);
  auto chain_gin = moddeg::check_degree_chain(cmp.of_gin);
  auto chain_lex = moddeg::check_degree_chain(cmp.of_lex);
  bool ok = cmp.all_hold() && chain_direct.ok && chain_gin.ok && chain_lex.ok;

  ordered_json j;
  j["direct"] = moddeg::report_to_json(cmp.direct);
  j["of_gin"] = moddeg::report_to_json(cmp.of_gin);
  j["of_lex"] = moddeg::report_to_json(cmp.of_lex);
  ordered_json ineq;
  ineq["sdeg_gin_equal"] = cmp.sdeg_gin_equal;
  ineq["sdeg_le_lex"] = cmp.sdeg_le_lex;
  ineq["hdeg_le_lex"] = cmp.hdeg_le_lex;
  ineq["adeg_le_gin"] = cmp.adeg_le_gin;
  ineq["degree_chains"] = chain_direct.ok && chain_gin.ok && chain_lex.ok;
  j["inequalities"] = ineq;
  j["ok"] = ok;

  std::ostringstream os;
  auto line = [&os](const char* name, const moddeg::Int& a, const char* rel,
                    const moddeg::Int& b, bool holds) {
    os << name << ": " << a << " " << rel << " " << b << "  "
       << (holds ? "OK" : "VIOLATED") << "\n";
  };
  line("sdeg F/U = sdeg F/gin(U) ", cmp.direct.sdeg, "=", cmp.of_gin.sdeg,
       cmp.sdeg_gin_equal);
  line("sdeg F/gin(U) <= sdeg F/U^lex", cmp.of_gin.sdeg, "<=", cmp.of_lex.sdeg,
       cmp.sdeg_le_lex);
  line("hdeg F/U <= hdeg F/U^lex", cmp.direct.hdeg, "<=", cmp.of_lex.hdeg,
       cmp.hdeg_le_lex);
  line("adeg F/U <= adeg F/gin(U)", cmp.direct.adeg, "<=", cmp.of_gin.adeg,
       cmp.adeg_le_gin);
  os << "deg <= adeg <= sdeg <= hdeg on all three reports: "
     << ((chain_direct.ok && chain_gin.ok && chain_lex.ok) ? "OK" : "VIOLATED")
     << "\n";
  emit(opt, j, os.str());
  return ok ? 0 : 2;
}

template <class F>
int dispatch(const F& field, const std::string& cmd,
             const moddeg::ProblemFile& pf, const Options& opt) {
  if (cmd == "degrees") return cmd_degrees(field, pf, opt);
  if (cmd == "chain") return cmd_chain(field, pf, opt);
  if (cmd == "gin") return cmd_gin(field, pf, opt);
  if (cmd == "lex") return cmd_lex(field, pf, opt);
  if (cmd == "hilbert") return cmd_hilbert(field, pf, opt);
  if (cmd == "bounds") return cmd_bounds(field, pf, opt);
  moddeg::fail("precondition", "unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree functions (deg, adeg, sdeg, hdeg) of graded quotients "
               "F/U via saturation chains, gin and lex submodules"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::string> names = {"degrees", "chain", "gin",
                                    "lex",     "hilbert", "bounds"};
  std::vector<std::string> descs = {
      "full degree report (DegreeReport JSON/text)",
      "saturation chain stages and ext degrees",
      "probabilistic generic initial module",
      "lexicographic submodule with the same Hilbert function",
      "Hilbert series, dimension and degree",
      "gin/lex bound theorems and the degree chain"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("file", opt.file, "problem file")->required();
    sub->add_option("--seed", opt.seed, "master random seed")
        ->each([&opt](const std::string&) { opt.seed_given = true; });
    sub->add_option("--trials", opt.trials, "gin consensus trials")
        ->each([&opt](const std::string&) { opt.trials_given = true; });
    sub->add_option("--field", opt.field, "coefficient field: q or p")
        ->check(CLI::IsMember({"q", "p"}));
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--degree-cap", opt.degree_cap,
                    "hard cap for the lex construction")
        ->each([&opt](const std::string&) { opt.cap_given = true; });
  }

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();

  auto report_error = [&opt](const moddeg::Error& e) {
    if (opt.format == "json") {
      ordered_json j;
      j["error"]["code"] = e.code();
      j["error"]["message"] = e.what();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    }
    return e.mathematical() ? 2 : 1;
  };

  try {
    std::ifstream in(opt.file);
    if (!in) {
      std::cerr << "error: cannot open " << opt.file << "\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    moddeg::ProblemFile pf = moddeg::parse_problem(buf.str());

    if (opt.field == "q") pf.ring.field = moddeg::FieldSpec::rationals();
    if (opt.field == "p") pf.ring.field = moddeg::FieldSpec::prime();

    if (pf.ring.field.kind == moddeg::FieldKind::Rationals)
      return dispatch(moddeg::RationalField{}, cmd, pf, opt);
    return dispatch(moddeg::PrimeField{pf.ring.field.p}, cmd, pf, opt);
  } catch (const moddeg::Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
