#include "ramlab/cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ramlab/errors.hpp"

namespace ramlab {

namespace {

using Json = nlohmann::ordered_json;

bool input_error(ErrorKind k) {
    return k == ErrorKind::ParseError || k == ErrorKind::ValidationError || k == ErrorKind::NonSquarefreeInput;
}

template <class R>
SplitSummary split_of(const Poly<R>& f, const typename R::Elem& p) {
    SplitSummary s;
    const auto eo = equation_order(f);
    s.degree = static_cast<long>(eo.degree());
    s.dedekind_maximal = dedekind_criterion(eo, p).maximal;
    const auto o = round2_pmaximal(eo, p);
    for (std::size_t i = 0; i < o.basis.rows(); ++i) s.order_basis.push_back(o.basis_string(i));
    s.index = f.ring().to_string(o.index());
    s.primes = decompose_prime(o);
    for (const auto& P : s.primes) s.lhs += P.e * P.f;
    return s;
}

Json primes_json(const std::vector<RamifiedPrime>& primes) {
    Json out = Json::array();
    for (const auto& P : primes) out.push_back({{"e", P.e}, {"f", P.f}, {"residue_poly", P.residue_poly.to_string()}});
    return out;
}

Json outcome_json(const ProblemOutcome& o) {
    Json j;
    j["name"] = o.name;
    if (o.spec) j["problem"] = describe(*o.spec);
    if (o.report) {
        const auto& r = *o.report;
        j["degree"] = r.degree;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["radical_dim"] = r.radical_dim;
        j["primes"] = primes_json(r.primes);
        j["verdicts"] = {{"eq11", r.eq11},
                         {"classical", r.classical},
                         {"inequality", r.inequality},
                         {"e5_c", r.e5_c},
                         {"e5_d", r.e5_d}};
        j["certified"] = r.certified;
        j["precision_used"] = r.precision_used;
        j["order_basis"] = r.order_basis;
        j["caveats"] = r.caveats;
    }
    if (o.split) {
        const auto& s = *o.split;
        j["degree"] = s.degree;
        j["lhs"] = s.lhs;
        j["primes"] = primes_json(s.primes);
        j["order_basis"] = s.order_basis;
        j["index"] = s.index;
        j["dedekind_maximal"] = s.dedekind_maximal;
    }
    if (!o.error_kind.empty()) j["error"] = {{"kind", o.error_kind}, {"message", o.error_message}};
    j["exit_code"] = o.exit_code;
    return j;
}

const char* status_of(int code) {
    switch (code) {
        case kExitOk: return "PASS";
        case kExitVerdict: return "FAIL";
        case kExitComputation: return "ERROR";
        default: return "INVALID";
    }
}

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

ProblemOutcome run(const ProblemSpec& spec) {
    ProblemOutcome out;
    out.name = describe(spec);
    out.spec = spec;
    try {
        const CompiledProblem problem = compile(spec);
        std::visit(
            [&](const auto& pr) {
                using T = std::decay_t<decltype(pr)>;
                const auto& p = [&]() -> const auto& {
                    if constexpr (std::is_same_v<T, ZProblem>) {
                        return pr.p;
                    } else {
                        return pr.pi;
                    }
                }();
                if (spec.mode == Mode::Split) {
                    out.split = split_of(pr.f, p);
                } else {
                    out.report = check_identity(pr.f, p, spec.precision);
                    out.exit_code = out.report->all_verdicts() ? kExitOk : kExitVerdict;
                }
            },
            problem);
    } catch (const Error& e) {
        out.report.reset();
        out.split.reset();
        out.error_kind = to_string(e.kind());
        out.error_message = e.what();
        out.exit_code = input_error(e.kind()) ? kExitInput : kExitComputation;
    } catch (const std::exception& e) {
        out.report.reset();
        out.split.reset();
        out.error_kind = "InternalError";
        out.error_message = e.what();
        out.exit_code = kExitComputation;
    }
    return out;
}

ProblemOutcome run_text(std::string_view text, std::string name, long precision) {
    ProblemSpec spec;
    try {
        spec = parse_problem(text);
        if (precision > 0) spec.precision = precision;
    } catch (const Error& e) {
        ProblemOutcome out;
        out.name = std::move(name);
        out.error_kind = to_string(e.kind());
        out.error_message = e.what();
        out.exit_code = input_error(e.kind()) ? kExitInput : kExitComputation;
        return out;
    }
    ProblemOutcome out = run(spec);
    if (!name.empty()) out.name = std::move(name);
    return out;
}

std::string render_text(const ProblemOutcome& o) {
    std::ostringstream os;
    os << "problem: " << o.name << "\n";
    if (o.spec && o.name != describe(*o.spec)) os << "input: " << describe(*o.spec) << "\n";
    auto primes = [&](const std::vector<RamifiedPrime>& ps) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            os << "P[" << i + 1 << "]: e=" << ps[i].e << " f=" << ps[i].f << " residue=" << ps[i].residue_poly.to_string()
               << "\n";
        }
    };
    auto basis = [&](const std::vector<std::string>& b) {
        os << "order basis: ";
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i];
        os << "\n";
    };
    if (o.split) {
        const auto& s = *o.split;
        os << "degree: " << s.degree << "\n";
        basis(s.order_basis);
        os << "index: " << s.index << (s.dedekind_maximal ? " (equation order already maximal)" : "") << "\n";
        primes(s.primes);
        os << "sum e*f: " << s.lhs << "\n";
    }
    if (o.report) {
        const auto& r = *o.report;
        os << "degree: " << r.degree << "\n";
        basis(r.order_basis);
        primes(r.primes);
        os << "lhs: " << r.lhs << "\n";
        os << "rhs: " << r.rhs << (r.certified ? " (certified at precision " : " (uncertified at precision ")
           << r.precision_used << ")\n";
        os << "radical_dim: " << r.radical_dim << "\n";
        os << "verdicts: eq11=" << yes(r.eq11) << " classical=" << yes(r.classical) << " inequality=" << yes(r.inequality)
           << " e5_c=" << yes(r.e5_c) << " e5_d=" << yes(r.e5_d) << "\n";
        for (const auto& c : r.caveats) os << "caveat: " << c << "\n";
    }
    if (!o.error_kind.empty()) os << "error: " << o.error_message << "\n";
    os << "status: " << status_of(o.exit_code) << "\n";
    return os.str();
}

std::string render_json(const ProblemOutcome& o) { return outcome_json(o).dump(2); }

int CorpusResult::exit_code() const {
    int code = kExitOk;
    for (const auto& o : outcomes) code = std::max(code, o.exit_code);
    return code;
}

CorpusResult run_corpus(const std::filesystem::path& dir, unsigned threads, long precision) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ValidationError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".problem") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });

    const auto start = std::chrono::steady_clock::now();
    CorpusResult result;
    result.outcomes.resize(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            std::ifstream in(files[i], std::ios::binary);
            std::stringstream buf;
            buf << in.rdbuf();
            result.outcomes[i] = run_text(buf.str(), files[i].filename().string(), precision);
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(files.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& o : result.outcomes) {
        if (o.exit_code == kExitOk) {
            ++result.passed;
        } else if (o.exit_code == kExitVerdict) {
            ++result.failed;
        } else {
            ++result.errors;
        }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string render_text(const CorpusResult& r) {
    std::ostringstream os;
    for (const auto& o : r.outcomes) os << render_text(o) << "\n";
    os << "corpus: " << r.outcomes.size() << " problems, " << r.passed << " passed, " << r.failed << " failed, "
       << r.errors << " errors\n";
    return os.str();
}

std::string render_json(const CorpusResult& r) {
    Json j;
    j["problems"] = Json::array();
    for (const auto& o : r.outcomes) j["problems"].push_back(outcome_json(o));
    j["total"] = r.outcomes.size();
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["errors"] = r.errors;
    j["seconds"] = r.seconds;
    return j.dump(2);
}

}  // namespace ramlab
