#include "fibpaths/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "fibpaths/automata.hpp"
#include "fibpaths/oracle.hpp"

namespace fibpaths::cli {

std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

std::size_t default_order() {
  if (const char* env = std::getenv("FIBPATH_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultOrder;
}

nlohmann::ordered_json report_to_json(const PathCountReport& r) {
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(r.family));
  j["k"] = r.k;
  j["method"] = std::string(to_string(r.method));
  j["order"] = r.order;
  auto& counts = j["counts"] = nlohmann::ordered_json::array();
  for (const Integer& c : r.counts) counts.push_back(c.get_str());
  return j;
}

PathCountReport report_from_json(const nlohmann::json& j) {
  PathCountReport r;
  try {
    const auto family = parse_family(j.at("family").get<std::string>());
    const auto method = parse_method(j.at("method").get<std::string>());
    if (!family || !method) throw std::invalid_argument("unknown family/method");
    r.family = *family;
    r.method = *method;
    r.k = j.at("k").get<unsigned>();
    r.order = j.at("order").get<std::size_t>();
    for (const auto& c : j.at("counts")) {
      r.counts.emplace_back(c.get<std::string>(), 10);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  if (r.counts.size() != r.order + 1) {
    throw std::invalid_argument("malformed report: counts length != order + 1");
  }
  return r;
}

std::string format_report(const PathCountReport& r, Format format,
                          bool header) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << report_to_json(r).dump();
      break;
    case Format::Text:
    case Format::Csv: {
      const char sep = format == Format::Csv ? ',' : ' ';
      if (format == Format::Csv && header) {
        for (std::size_t i = 0; i < r.counts.size(); ++i) {
          if (i) os << sep;
          os << i;
        }
        os << '\n';
      }
      for (std::size_t i = 0; i < r.counts.size(); ++i) {
        if (i) os << sep;
        os << r.counts[i];
      }
      break;
    }
  }
  os << '\n';
  return os.str();
}

int run_seq(const SeqOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.k == 0) {
    err << "error: --k must be a positive integer\n";
    return kUsage;
  }
  try {
    const PathCountReport report =
        sequence(opts.family, opts.k, opts.n, opts.method, opts.depth);
    out << format_report(report, opts.format, opts.header);
    return kOk;
  } catch (const FamilyError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case FamilyError::Code::MethodUnavailable: return kUnavailable;
      case FamilyError::Code::InvalidParams: return kUsage;
      case FamilyError::Code::NonIntegralResult: return kInternal;
    }
    return kInternal;
  } catch (const oracle::BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

const std::vector<TableFixture>& published_tables() {
  using F = FamilyKind;
  static const std::vector<TableFixture> tables = {
      {1, F::Fib, 1, 0,
       {"1", "1", "3", "8", "23", "67", "199", "600", "1834", "5674", "17743"}},
      {1, F::Fib, 2, 0,
       {"1", "1", "4", "13", "47", "168", "610", "2226", "8185", "30283",
        "112736"}},
      {1, F::Fib, 3, 0,
       {"1", "1", "5", "20", "89", "391", "1735", "7712", "34402", "153898",
        "690499"}},
      {1, F::Fib, 4, 0,
       {"1", "1", "6", "29", "155", "820", "4366", "23262", "124153", "663523",
        "3551158"}},
      // The grand table starts at n = 1.
      {2, F::Grand, 1, 1,
       {"1", "4", "11", "36", "115", "378", "1251", "4182", "14073", "47634"}},
      {2, F::Grand, 2, 1,
       {"1", "5", "16", "63", "237", "920", "3573", "14005", "55156",
        "218359"}},
      {2, F::Grand, 3, 1,
       {"1", "6", "23", "108", "487", "2248", "10371", "48122", "223977",
        "1046120"}},
      {2, F::Grand, 4, 1,
       {"1", "7", "32", "177", "949", "5172", "28173", "153963", "842940",
        "4624581"}},
      {3, F::Prefix, 1, 0,
       {"1", "2", "6", "19", "62", "205", "684", "2298", "7764", "26355",
        "89820"}},
      {3, F::Prefix, 2, 0,
       {"1", "2", "7", "26", "101", "396", "1564", "6203", "24693", "98605",
        "394853"}},
      {3, F::Prefix, 3, 0,
       {"1", "2", "8", "35", "162", "757", "3558", "16766", "79176", "374579",
        "1775082"}},
      {3, F::Prefix, 4, 0,
       {"1", "2", "9", "46", "251", "1384", "7668", "42555", "236463",
        "1315281", "7322967"}},
      {4, F::GrandPrefix, 1, 0,
       {"1", "3", "10", "35", "124", "441", "1570", "5591", "19912", "70917",
        "252574"}},
      {4, F::GrandPrefix, 2, 0,
       {"1", "3", "11", "44", "181", "751", "3124", "13005", "54151",
        "225492", "938997"}},
      {4, F::GrandPrefix, 3, 0,
       {"1", "3", "12", "55", "264", "1285", "6280", "30727", "150392",
        "736157", "3603528"}},
      {4, F::GrandPrefix, 4, 0,
       {"1", "3", "13", "68", "379", "2151", "12268", "70061", "400249",
        "2286780", "13065595"}},
  };
  return tables;
}

int run_tables(std::span<const TableFixture> fixtures, bool json,
               std::ostream& out) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  std::vector<std::string> mismatches;
  std::size_t total = 0;

  for (const TableFixture& row : fixtures) {
    const std::size_t n_max = row.first_index + row.values.size() - 1;
    const PathCountReport r = sequence(row.family, row.k, n_max, Method::Closed);
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      const std::size_t n = row.first_index + i;
      const std::string got = r.counts[n].get_str();
      const bool pass = got == row.values[i];
      ++total;
      std::ostringstream line;
      line << "table " << row.table << " " << to_string(row.family)
           << " k=" << row.k << " i=" << n << " expected=" << row.values[i]
           << " got=" << got;
      if (!pass) mismatches.push_back(line.str());
      if (json) {
        cells.push_back({{"table", row.table},
                         {"family", std::string(to_string(row.family))},
                         {"k", row.k},
                         {"i", n},
                         {"expected", row.values[i]},
                         {"got", got},
                         {"pass", pass}});
      } else {
        out << (pass ? "PASS " : "FAIL ") << line.str() << '\n';
      }
    }
  }

  if (json) {
    nlohmann::ordered_json doc;
    doc["cells"] = std::move(cells);
    doc["total"] = total;
    doc["mismatches"] = mismatches.size();
    doc["pass"] = mismatches.empty();
    out << doc.dump(2) << '\n';
  } else {
    out << "tables: " << total - mismatches.size() << "/" << total
        << " cells match\n";
    if (!mismatches.empty()) {
      out << "mismatches:\n";
      for (const auto& m : mismatches) out << "  " << m << '\n';
    }
  }
  return mismatches.empty() ? kOk : kMismatch;
}

namespace {

struct VerifyJob {
  FamilyKind family;
  unsigned k;
  Method method;
  std::size_t n_max;
  std::optional<std::size_t> depth;
  // filled by the worker
  std::vector<Integer> counts;
  std::string error;
};

void run_jobs(std::vector<VerifyJob>& jobs, unsigned threads) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      VerifyJob& job = jobs[i];
      try {
        job.counts =
            sequence(job.family, job.k, job.n_max, job.method, job.depth)
                .counts;
      } catch (const std::exception& e) {
        job.error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

}  // namespace

int run_verify(const VerifyOptions& opts, std::ostream& out) {
  if (opts.k && *opts.k == 0) {
    out << "verify: --k must be a positive integer\n";
    return kUsage;
  }
  std::vector<VerifyJob> jobs;
  for (FamilyKind family : kAllFamilies) {
    if (opts.family && *opts.family != family) continue;
    const unsigned k_lo = opts.k.value_or(1);
    const unsigned k_hi = opts.k.value_or(opts.k_max);
    for (unsigned k = k_lo; k <= k_hi; ++k) {
      for (Method method : kAllMethods) {
        if (!method_available(family, method)) continue;
        std::size_t n = opts.n_max;
        if (method == Method::Brute) {
          n = std::min({n, opts.brute_max,
                        static_cast<std::size_t>(oracle::kMaxCountLength)});
        }
        std::optional<std::size_t> depth;
        if (method == Method::ContinuedFraction) {
          depth = opts.depth.value_or((opts.n_max + 1) / 2 + 1);
        } else if (method == Method::Automaton) {
          depth = opts.depth;
        }
        jobs.push_back({family, k, method, n, depth, {}, {}});
      }
    }
  }
  run_jobs(jobs, opts.threads);

  // Jobs are created in (family, k, method) order, so iterating them in
  // sequence gives a deterministic report regardless of scheduling.
  std::map<std::pair<FamilyKind, unsigned>, const VerifyJob*> reference;
  for (const VerifyJob& job : jobs) {
    if (job.method == Method::Closed) reference[{job.family, job.k}] = &job;
  }

  std::optional<std::string> first_failure;
  std::size_t compared = 0;
  for (const VerifyJob& job : jobs) {
    std::ostringstream line;
    line << to_string(job.family) << " k=" << job.k << " "
         << to_string(job.method) << " n<=" << job.n_max;
    std::optional<std::string> failure;
    const VerifyJob* ref = reference.at({job.family, job.k});
    if (!job.error.empty()) {
      failure = "(" + std::string(to_string(job.family)) + "," +
                std::to_string(job.k) + "," + std::string(to_string(job.method)) +
                ") error: " + job.error;
    } else if (!ref->error.empty()) {
      failure = "(" + std::string(to_string(job.family)) + "," +
                std::to_string(job.k) + ",closed) error: " + ref->error;
    } else {
      for (std::size_t n = 0; n < job.counts.size(); ++n) {
        ++compared;
        if (job.counts[n] != ref->counts[n]) {
          std::ostringstream f;
          f << "(" << to_string(job.family) << "," << job.k << "," << n
            << ",closed," << to_string(job.method) << "," << ref->counts[n]
            << "," << job.counts[n] << ")";
          failure = f.str();
          break;
        }
      }
    }
    if (failure) {
      out << "DISAGREE " << line.str() << " " << *failure << '\n';
      if (!first_failure) first_failure = failure;
    } else {
      out << "agree    " << line.str() << '\n';
    }
  }

  if (first_failure) {
    out << "verify: first disagreement " << *first_failure << '\n';
    return kMismatch;
  }
  out << "verify: " << jobs.size() << " runs, " << compared
      << " coefficients, all methods agree\n";
  return kOk;
}

}  // namespace fibpaths::cli
