// Command-line front end: single-word analysis, census runs, fixture
// verification and low-level inspection.
//
// Exit codes: 0 success, 1 usage or parse error, 2 computation error,
// 3 verification mismatch.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "vh/alexander.hpp"
#include "vh/census.hpp"
#include "vh/coset_table.hpp"
#include "vh/errors.hpp"
#include "vh/reference.hpp"
#include "vh/rewrite.hpp"
#include "vh/sl2.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCompute = 2;
constexpr int kExitMismatch = 3;

unsigned default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

vh::GenWord monodromy_arg(const std::string& text) {
  vh::GenWord w = vh::parse_word(text);
  if (w.alphabet() != vh::Alphabet::Monodromy) throw vh::ParseError("expected a word in x, y: \"" + text + "\"");
  return w;
}

vh::GenWord subgroup_arg(const std::string& text, int i) {
  vh::GenWord w = vh::parse_word(text, i);
  if (w.alphabet() != vh::Alphabet::Subgroup) throw vh::ParseError("expected a word in A, B: \"" + text + "\"");
  return w;
}

void print_record(const vh::CensusRecord& r, std::ostream& os) {
  os << "word:     " << r.word << '\n'
     << "length:   " << r.length << '\n'
     << "trace:    " << r.trace << '\n'
     << "m:        " << r.m << '\n'
     << "n3, n4:   " << r.n3 << ", " << r.n4 << '\n'
     << "t3, t4:   " << r.t3 << ", " << r.t4 << '\n'
     << "W3:       " << r.W3 << '\n'
     << "W4:       " << r.W4 << '\n'
     << "delta3:   " << r.delta3 << '\n'
     << "beta3:    [" << r.beta31.to_string() << ", " << (r.beta32 ? r.beta32->to_string() : "none") << "]\n"
     << "beta4:    [" << r.beta41.to_string() << ", " << r.beta42.to_string() << "]\n"
     << "success:  " << (r.success ? "yes" : "no") << '\n';
  if (!r.anomalies.empty()) {
    os << "anomalies:";
    for (const auto& a : r.anomalies) os << ' ' << a;
    os << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slopes, twists and Alexander polynomials for punctured-torus bundle monodromies"};
  app.require_subcommand(1, 1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline on one monodromy word");
  std::string a_word, a_w3, a_w4;
  bool a_json = false;
  analyze->add_option("word", a_word, "Monodromy word in x, y")->required();
  analyze->add_option("--w3", a_w3, "Certificate word over A, B for i = 3");
  analyze->add_option("--w4", a_w4, "Certificate word over A, B for i = 4");
  analyze->add_flag("--json", a_json, "Print the record as JSON");

  // census
  auto* cen = app.add_subcommand("census", "Run the pipeline over all classes up to a complexity bound");
  int c_max = 0;
  std::string c_out, c_format = "csv";
  unsigned c_jobs = default_jobs();
  cen->add_option("--max-complexity", c_max, "Largest word length (2..20)")->required()->check(CLI::Range(2, 20));
  cen->add_option("--out", c_out, "Output file (default stdout)");
  cen->add_option("--format", c_format, "csv, json or summary")->check(CLI::IsMember({"csv", "json", "summary"}));
  cen->add_option("--jobs", c_jobs, "Worker threads")->envname("VH_JOBS")->check(CLI::PositiveNumber);

  // verify-paper
  auto* ver = app.add_subcommand("verify-paper", "Check the embedded reference fixtures");
  int v_max = 12;
  unsigned v_jobs = default_jobs();
  ver->add_option("--max-complexity", v_max, "Census bound for the count checks")->check(CLI::Range(2, 20));
  ver->add_option("--jobs", v_jobs, "Worker threads")->envname("VH_JOBS")->check(CLI::PositiveNumber);

  // rewrite
  auto* rw = app.add_subcommand("rewrite", "Minimal power and certificate word for one subgroup");
  int r_i = 0;
  std::string r_word;
  rw->add_option("-i", r_i, "Subgroup index parameter")->required()->check(CLI::IsMember({3, 4}));
  rw->add_option("word", r_word, "Monodromy word")->required();

  // index
  auto* idx = app.add_subcommand("index", "Index of the subgroup from coset enumeration");
  int x_i = 0;
  idx->add_option("-i", x_i, "Subgroup index parameter")->required()->check(CLI::IsMember({3, 4}));

  // alex
  auto* alex = app.add_subcommand("alex", "Alexander polynomial of a subgroup word");
  int l_i = 0;
  std::string l_word;
  alex->add_option("-i", l_i, "Case (3 or 4)")->required()->check(CLI::IsMember({3, 4}));
  alex->add_option("--w", l_word, "Subgroup word over A, B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) {
      vh::GenWord f = monodromy_arg(a_word);
      if (f.alphabet() != vh::Alphabet::Monodromy) throw vh::ParseError("analyze expects a word in x, y");
      vh::Overrides ov;
      if (!a_w3.empty()) ov.w3 = subgroup_arg(a_w3, 3);
      if (!a_w4.empty()) ov.w4 = subgroup_arg(a_w4, 4);
      vh::PipelineContext ctx = vh::PipelineContext::build();
      vh::CensusRecord r = vh::run_pipeline(ctx, f, ov);
      if (a_json)
        std::cout << vh::record_to_json(r) << '\n';
      else
        print_record(r, std::cout);
      return 0;
    }
    if (*cen) {
      vh::PipelineContext ctx = vh::PipelineContext::build();
      vh::CensusResult res = vh::census(ctx, c_max, c_jobs);
      std::string body;
      if (c_format == "csv")
        body = vh::records_to_csv(res.records);
      else if (c_format == "json")
        body = vh::records_to_json(res.records);
      else
        body = vh::summary_to_text(res.summary);
      if (c_out.empty()) {
        std::cout << body;
      } else {
        std::ofstream f(c_out, std::ios::binary);
        if (!f) throw vh::Error("cannot open " + c_out);
        f << body;
        if (!f) throw vh::Error("write failed for " + c_out);
      }
      if (c_format != "summary") std::cerr << vh::summary_to_text(res.summary);
      return 0;
    }
    if (*ver) {
      vh::PipelineContext ctx = vh::PipelineContext::build();
      auto checks = vh::verify_paper(ctx, std::cout, {v_max, v_jobs});
      for (const auto& c : checks)
        if (c.hard && !c.pass) return kExitMismatch;
      return 0;
    }
    if (*rw) {
      vh::GenWord f = monodromy_arg(r_word);
      if (f.alphabet() != vh::Alphabet::Monodromy) throw vh::ParseError("rewrite expects a word in x, y");
      vh::CosetTable t = vh::build_coset_table(r_i);
      vh::PowerRewrite p = vh::rewrite_power(t, f);
      std::cout << "m: " << p.m << '\n'
                << "W: " << p.word.to_string() << '\n'
                << "n" << r_i << ": " << vh::expsum(p.word, vh::Letter::A) << '\n'
                << "t" << r_i << ": " << vh::twist(f.pow(p.m), p.word) << '\n';
      return 0;
    }
    if (*idx) {
      std::cout << vh::build_coset_table(x_i).size() << '\n';
      return 0;
    }
    if (*alex) {
      vh::GenWord w = subgroup_arg(l_word, l_i);
      vh::AlexCase c = vh::make_alex_case(l_i);
      vh::AlexResult r = vh::alexander_poly(c, w);
      std::cout << "delta: " << r.delta.to_string() << '\n'
                << "leading: " << r.leading.coef.to_string() << " * s^" << r.leading.sdeg << '\n'
                << "q-divisible: " << (r.q_divisible ? "yes" : "no") << '\n';
      if (r.untransposed_fallback) std::cout << "note: untransposed block used\n";
      return 0;
    }
  } catch (const vh::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const vh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitUsage;
}
