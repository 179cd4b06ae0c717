#include "vh/census.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "vh/errors.hpp"
#include "vh/rewrite.hpp"
#include "vh/sl2.hpp"

namespace vh {

PipelineContext PipelineContext::build() {
  return PipelineContext{build_coset_table(3), build_coset_table(4), make_alex_case(3), make_alex_case(4), true};
}

CensusRecord run_pipeline(const PipelineContext& ctx, const GenWord& f, const Overrides& ov) {
  if (f.alphabet() != Alphabet::Monodromy) throw Error("pipeline expects a monodromy word");
  CensusRecord r;
  r.word = f.to_string();
  r.length = f.letter_count();
  r.trace = mat_of_word(f).trace().get_str();

  std::int64_t m3 = minimal_power(ctx.table3, f);
  std::int64_t m4 = minimal_power(ctx.table4, f);
  r.m = std::lcm(m3, m4);
  if (r.m > 24) throw Error("joint minimal power " + std::to_string(r.m) + " exceeds 24");

  PowerRewrite w3 = rewrite_power(ctx.table3, f, ov.w3, r.m);
  PowerRewrite w4 = rewrite_power(ctx.table4, f, ov.w4, r.m);
  r.W3 = w3.word.to_string();
  r.W4 = w4.word.to_string();

  std::optional<AlexResult> d3;
  try {
    d3 = alexander_poly(ctx.alex3, w3.word);
    r.delta3 = d3->delta.to_string();
  } catch (const ZeroPolynomial&) {
    r.delta3 = "0";
    r.anomalies.push_back("zero-delta3");
  } catch (const StructuralAssertionFailed& e) {
    r.delta3 = e.polynomial();
    r.anomalies.push_back("delta3-not-linear");
  }

  if (ctx.check_case4) {
    try {
      AlexResult d4 = alexander_poly(ctx.alex4, w4.word);
      if (d4.untransposed_fallback) r.anomalies.push_back("delta4-untransposed");
    } catch (const ZeroPolynomial&) {
      r.anomalies.push_back("zero-delta4");
    } catch (const StructuralAssertionFailed&) {
      r.anomalies.push_back("delta4-not-q-divisible");
    }
  }

  GenWord fm = f.pow(r.m);
  r.n3 = expsum(w3.word, Letter::A);
  r.n4 = expsum(w4.word, Letter::A);
  r.t3 = twist(fm, w3.word);
  r.t4 = twist(fm, w4.word);
  r.beta31 = frame_transform(normalize(3, r.n3), r.t3);
  r.beta41 = frame_transform(normalize(2, r.n4), r.t4);
  r.beta42 = frame_transform(Slope{1, 0}, r.t4);
  if (d3) {
    BetaSet b = beta_slopes(f, r.m, w3.word, w4.word, *d3);
    r.beta32 = b.beta32;
    r.success = vh_success(b);
  } else {
    // without the second slope the criterion cannot be evaluated
    r.success = false;
  }
  return r;
}

CensusRecord run_pipeline(const PipelineContext& ctx, const ComplexityClass& c, const Overrides& ov) {
  return run_pipeline(ctx, c.word(), ov);
}

std::vector<ComplexityClass> enumerate_classes(int max_len) {
  if (max_len < 2 || max_len > 20)
    throw BoundOutOfRange("complexity bound must be between 2 and 20, got " + std::to_string(max_len));
  return lyndon_words(2, static_cast<std::size_t>(max_len));
}

CensusResult census(const PipelineContext& ctx, int max_len, unsigned jobs) {
  auto start = std::chrono::steady_clock::now();
  std::vector<ComplexityClass> classes = enumerate_classes(max_len);
  CensusResult out;
  out.records.resize(classes.size());
  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(classes.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= classes.size()) return;
      try {
        out.records[k] = run_pipeline(ctx, classes[k]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next = classes.size();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  CensusSummary& s = out.summary;
  s.max_complexity = max_len;
  s.class_count = out.records.size();
  for (const auto& r : out.records) {
    if (r.success)
      ++s.success_count;
    else
      s.failures.push_back(r.word);
  }
  s.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- serialization ----

const char* const kCsvHeader =
    "word,length,trace,m,n3,n4,t3,t4,W3,W4,beta31,beta32,beta41,beta42,delta3,success,anomalies";

namespace {

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

nlohmann::ordered_json to_json_obj(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["word"] = r.word;
  j["length"] = r.length;
  mpz_class tr(r.trace);
  if (tr.fits_slong_p())
    j["trace"] = tr.get_si();
  else
    j["trace"] = r.trace;
  j["m"] = r.m;
  j["n3"] = r.n3;
  j["n4"] = r.n4;
  j["t3"] = r.t3;
  j["t4"] = r.t4;
  j["W3"] = r.W3;
  j["W4"] = r.W4;
  j["beta31"] = r.beta31.to_string();
  j["beta32"] = r.beta32 ? nlohmann::ordered_json(r.beta32->to_string()) : nlohmann::ordered_json(nullptr);
  j["beta41"] = r.beta41.to_string();
  j["beta42"] = r.beta42.to_string();
  j["delta3"] = r.delta3;
  j["success"] = r.success;
  j["anomalies"] = r.anomalies;
  return j;
}

CensusRecord from_json_obj(const nlohmann::json& j) {
  CensusRecord r;
  r.word = j.at("word").get<std::string>();
  r.length = j.at("length").get<std::int64_t>();
  const auto& tr = j.at("trace");
  r.trace = tr.is_string() ? tr.get<std::string>() : std::to_string(tr.get<std::int64_t>());
  r.m = j.at("m").get<std::int64_t>();
  r.n3 = j.at("n3").get<std::int64_t>();
  r.n4 = j.at("n4").get<std::int64_t>();
  r.t3 = j.at("t3").get<std::int64_t>();
  r.t4 = j.at("t4").get<std::int64_t>();
  r.W3 = j.at("W3").get<std::string>();
  r.W4 = j.at("W4").get<std::string>();
  r.beta31 = parse_slope(j.at("beta31").get<std::string>());
  if (!j.at("beta32").is_null()) r.beta32 = parse_slope(j.at("beta32").get<std::string>());
  r.beta41 = parse_slope(j.at("beta41").get<std::string>());
  r.beta42 = parse_slope(j.at("beta42").get<std::string>());
  r.delta3 = j.at("delta3").get<std::string>();
  r.success = j.at("success").get<bool>();
  r.anomalies = j.at("anomalies").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::string records_to_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << csv_field(r.word) << ',' << r.length << ',' << r.trace << ',' << r.m << ',' << r.n3 << ','
       << r.n4 << ',' << r.t3 << ',' << r.t4 << ',' << csv_field(r.W3) << ',' << csv_field(r.W4) << ','
       << csv_field(r.beta31.to_string()) << ',' << csv_field(r.beta32 ? r.beta32->to_string() : "")
       << ',' << csv_field(r.beta41.to_string()) << ',' << csv_field(r.beta42.to_string()) << ','
       << csv_field(r.delta3) << ',' << (r.success ? "true" : "false") << ','
       << csv_field(join(r.anomalies, ";")) << '\n';
  }
  return os.str();
}

std::string record_to_json(const CensusRecord& r) { return to_json_obj(r).dump(2); }

std::string records_to_json(const std::vector<CensusRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json_obj(r));
  return arr.dump(2) + "\n";
}

std::vector<CensusRecord> records_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  std::vector<CensusRecord> out;
  try {
    if (j.is_object()) {
      out.push_back(from_json_obj(j));
    } else {
      for (const auto& o : j) out.push_back(from_json_obj(o));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("record schema mismatch: ") + e.what());
  }
  return out;
}

std::string summary_to_text(const CensusSummary& s) {
  std::ostringstream os;
  os << "max complexity: " << s.max_complexity << '\n'
     << "classes: " << s.class_count << '\n'
     << "successes: " << s.success_count << '\n'
     << "failures: " << s.failures.size() << '\n';
  for (const auto& w : s.failures) os << "  " << w << '\n';
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "runtime: " << s.runtime_seconds << " s\n";
  return os.str();
}

}  // namespace vh
