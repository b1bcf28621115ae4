#include "absorb/sweep.hpp"

#include "absorb/basic_code.hpp"
#include "absorb/channel.hpp"
#include "absorb/e1.hpp"
#include "absorb/errors.hpp"
#include "absorb/improved.hpp"
#include "absorb/marker.hpp"
#include "absorb/multi.hpp"
#include "absorb/params_io.hpp"
#include "absorb/separating.hpp"
#include "absorb/stats.hpp"
#include "absorb/vt.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace absorb::sweep {
namespace {

using Clock = std::chrono::steady_clock;

bool failure_less(const Failure& a, const Failure& b) {
    return std::tie(a.codeword, a.corrupted, a.reason, a.decoded) < std::tie(b.codeword, b.corrupted, b.reason, b.decoded);
}

struct BallEntry {
    std::uint64_t key;
    Word y;
    std::size_t owner;
};

struct Partial {
    std::uint64_t corruptions = 0;
    std::uint64_t failureCount = 0;
    std::vector<Failure> failures;
    std::vector<BallEntry> entries;
};

void record(Partial& acc, const SweepSpec& spec, Failure f) {
    ++acc.failureCount;
    if (acc.failures.size() < spec.maxFailures) acc.failures.push_back(std::move(f));
}

// Decodes every ball member of codeword i.
void visit(const SweepSpec& spec, std::size_t i, Partial& acc) {
    const Word& c = spec.codewords[i];
    const std::uint64_t key = spec.classKey ? spec.classKey(c) : 0;
    for (Word& y : spec.ball(c)) {
        ++acc.corruptions;
        try {
            Word got = spec.decode(c, y);
            if (got != c) record(acc, spec, {c, y, std::move(got), "wrong codeword"});
        } catch (const std::exception& e) {
            record(acc, spec, {c, y, std::nullopt, e.what()});
        }
        if (spec.checkDisjoint) acc.entries.push_back({key, std::move(y), i});
    }
}

SweepCounts finish(const SweepSpec& spec, Partial&& all) {
    SweepCounts out;
    out.codewords = spec.codewords.size();
    out.corruptions = all.corruptions;
    std::vector<std::uint64_t> keys;
    keys.reserve(spec.codewords.size());
    for (const Word& c : spec.codewords) keys.push_back(spec.classKey ? spec.classKey(c) : 0);
    std::sort(keys.begin(), keys.end());
    out.classes = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());

    if (spec.checkDisjoint) {
        auto& e = all.entries;
        std::sort(e.begin(), e.end(), [&](const BallEntry& a, const BallEntry& b) {
            return std::tie(a.key, a.y, spec.codewords[a.owner]) < std::tie(b.key, b.y, spec.codewords[b.owner]);
        });
        for (std::size_t k = 1; k < e.size(); ++k) {
            if (e[k].key == e[k - 1].key && e[k].y == e[k - 1].y && e[k].owner != e[k - 1].owner) {
                record(all, spec, {spec.codewords[e[k - 1].owner], e[k].y, spec.codewords[e[k].owner], "ball overlap"});
            }
        }
    }
    std::sort(all.failures.begin(), all.failures.end(), failure_less);
    out.failureCount = all.failureCount;
    out.failures = std::move(all.failures);
    if (out.failures.size() > spec.maxFailures) out.failures.resize(spec.maxFailures);
    return out;
}

void merge_into(Partial& all, Partial&& part) {
    all.corruptions += part.corruptions;
    all.failureCount += part.failureCount;
    all.failures.insert(all.failures.end(), std::make_move_iterator(part.failures.begin()),
                        std::make_move_iterator(part.failures.end()));
    all.entries.insert(all.entries.end(), std::make_move_iterator(part.entries.begin()),
                       std::make_move_iterator(part.entries.end()));
}

// Assigns consecutive ids to distinct parameter keys.
class ClassIndex {
public:
    std::uint64_t add(const Word& c, const std::vector<std::uint64_t>& key) {
        const auto [it, fresh] = ids_.emplace(key, ids_.size());
        of_.emplace(c, it->second);
        return it->second;
    }
    std::uint64_t operator()(const Word& c) const { return of_.at(c); }
    std::size_t size() const { return ids_.size(); }

private:
    std::map<std::vector<std::uint64_t>, std::uint64_t> ids_;
    std::unordered_map<Word, std::uint64_t, WordHash> of_;
};

std::vector<std::uint64_t> improved_key(const improved::ImprovedParams& p) {
    std::vector<std::uint64_t> key{p.r1, p.r2};
    for (const auto* s : {&p.alpha, &p.beta}) {
        key.insert(key.end(), s->counts.begin(), s->counts.end());
        key.insert(key.end(), {s->descent, s->inv, s->syn, s->loc});
    }
    return key;
}

VerificationReport make_report(std::string codeId, Scope scope, const SweepCounts& counts, Clock::time_point start) {
    VerificationReport r;
    r.codeId = std::move(codeId);
    r.scope = std::move(scope);
    r.totalCodewords = counts.codewords;
    r.totalCorruptions = counts.corruptions;
    r.totalClasses = counts.classes;
    r.failureCount = counts.failureCount;
    r.failures = counts.failures;
    r.wallTime = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

SweepCounts run(const SweepSpec& spec, bool parallel) { return parallel ? run_sweep(spec) : run_sweep_serial(spec); }

} // namespace

SweepCounts run_sweep_serial(const SweepSpec& spec) {
    Partial all;
    for (std::size_t i = 0; i < spec.codewords.size(); ++i) visit(spec, i, all);
    return finish(spec, std::move(all));
}

SweepCounts run_sweep(const SweepSpec& spec) {
    Partial all;
    const auto count = static_cast<std::ptrdiff_t>(spec.codewords.size());
#pragma omp parallel
    {
        Partial local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::ptrdiff_t i = 0; i < count; ++i) visit(spec, static_cast<std::size_t>(i), local);
#pragma omp critical(absorb_sweep_merge)
        merge_into(all, std::move(local));
    }
    return finish(spec, std::move(all));
}

VerificationReport verify_vt(std::size_t n, std::uint64_t cap, bool parallel) {
    const auto start = Clock::now();
    if (n < 2) throw DomainError("VT sweep needs n >= 2");
    SweepSpec spec;
    spec.codewords = all_words(2, n, cap);
    spec.ball = [](const Word& c) { return absorption_ball(c, 1); };
    spec.classKey = [n](const Word& c) { return vt_syndrome(c) % (n + 1); };
    spec.decode = [n](const Word& c, const Word& y) {
        return vt::absorption_decode_binary(y, {n, vt_syndrome(c) % (n + 1)});
    };
    return make_report("vt", {2, n, 1, {{"family", "VT_a(n), a = 0..n"}}}, run(spec, parallel), start);
}

VerificationReport verify_basic(int q, std::size_t n, std::uint64_t cap, bool parallel) {
    const auto start = Clock::now();
    require_alphabet(q);
    if (n < 3) throw DomainError("basic sweep needs n >= 3");
    SweepSpec spec;
    spec.codewords = all_words(q, n, cap);
    auto index = std::make_shared<ClassIndex>();
    for (const Word& c : spec.codewords) {
        const basic::BasicParams p = basic::params_of(c);
        std::vector<std::uint64_t> key(p.s.begin(), p.s.end());
        key.insert(key.end(), {p.t1, p.t2, p.d1, p.d2});
        index->add(c, key);
    }
    spec.ball = [](const Word& c) { return absorption_ball(c, 1); };
    spec.classKey = [index](const Word& c) { return (*index)(c); };
    spec.decode = [](const Word& c, const Word& y) { return basic::decode_single_absorption(y, basic::params_of(c)); };
    return make_report("basic", {q, n, 1, {{"family", "all parameter tuples"}, {"moduli", "natural"}}}, run(spec, parallel),
                       start);
}

VerificationReport verify_improved(int q, std::size_t n, std::size_t delta, std::uint64_t cap, bool parallel) {
    const auto start = Clock::now();
    require_alphabet(q);
    SweepSpec spec;
    for (Word& x : all_words(q, n, cap)) {
        if (marker::r_membership(x, delta)) spec.codewords.push_back(std::move(x));
    }
    auto index = std::make_shared<ClassIndex>();
    for (const Word& c : spec.codewords) index->add(c, improved_key(improved::params_of(c, delta)));
    spec.ball = [](const Word& c) { return absorption_ball(c, 1); };
    spec.classKey = [index](const Word& c) { return (*index)(c); };
    spec.decode = [delta](const Word& c, const Word& y) {
        return improved::decode_improved(y, improved::params_of(c, delta));
    };
    const std::size_t L = improved::window_bound(delta);
    return make_report("improved", {q, n, 1, {{"family", "all classes of R_{q,n}"}, {"delta", delta}, {"L", L}}},
                       run(spec, parallel), start);
}

VerificationReport verify_multi(int q, std::size_t n, std::size_t t, std::uint64_t cap, bool parallel) {
    const auto start = Clock::now();
    require_alphabet(q);
    if (t < 2 || t >= n) throw DomainError("multi sweep needs 2 <= t < n");

    // Improved classes at segment cap n, each cut by the compressed labels.
    std::vector<improved::ImprovedParams> bases;
    std::map<std::vector<std::uint64_t>, std::size_t> baseIds;
    std::vector<Word> members;
    for (Word& x : all_words(q, n, cap)) {
        if (!marker::r_membership(x, n)) continue;
        const improved::ImprovedParams p = improved::params_of(x, n);
        if (baseIds.emplace(improved_key(p), bases.size()).second) bases.push_back(p);
        members.push_back(std::move(x));
    }
    const SeparatingFunction sep = brute_force_separating_function(n, q, t, cap);
    const SeparationAudit audit = audit_separation(sep);

    auto codes = std::make_shared<std::vector<multi::MultiCode>>();
    codes->reserve(bases.size());
    for (const auto& b : bases) codes->push_back(multi::make_multi_code(b, t, sep));
    auto owner = std::make_shared<std::unordered_map<Word, std::size_t, WordHash>>();
    auto index = std::make_shared<ClassIndex>();
    std::uint64_t pmax = 1;
    std::vector<Failure> extra;
    for (std::size_t k = 0; k < codes->size(); ++k) {
        const multi::MultiCode& code = (*codes)[k];
        pmax = std::max(pmax, code.pmax());
        for (const Word& u : code.base()) {
            owner->emplace(u, k);
            const multi::Label a = code.fbar(u);
            index->add(u, {k, a.residue, a.modulus});
            if (code.neighbors(u).size() >= code.neighbor_bound()) {
                extra.push_back({u, u, std::nullopt, "neighbor set reaches the bound"});
            }
        }
    }
    if (!audit.passed()) extra.push_back({Word::zeros(q, n), Word::zeros(q, n), std::nullopt, "separating function fails the audit"});

    SweepSpec spec;
    spec.codewords = std::move(members);
    spec.ball = [t](const Word& c) { return absorption_ball(c, t); };
    spec.classKey = [index](const Word& c) { return (*index)(c); };
    spec.decode = [codes, owner](const Word& c, const Word& y) {
        const multi::MultiCode& code = (*codes)[owner->at(c)];
        return code.decode(y, code.fbar(c));
    };
    SweepCounts counts = run(spec, parallel);
    counts.failureCount += extra.size();
    counts.failures.insert(counts.failures.end(), extra.begin(), extra.end());
    std::sort(counts.failures.begin(), counts.failures.end(), failure_less);

    const std::uint64_t nb = codes->empty() ? 0 : codes->front().neighbor_bound();
    Scope scope{q, n, t,
                {{"family", "improved classes of R_{q,n} cut by compressed label"},
                 {"delta", n},
                 {"baseClasses", bases.size()},
                 {"Pmax", pmax},
                 {"neighborBound", nb},
                 {"separatingColors", sep.colors_used()},
                 {"auditViolations", audit.violations}}};
    return make_report("multi", std::move(scope), counts, start);
}

VerificationReport verify_e1(int q, std::size_t n, std::uint64_t cap, bool parallel) {
    const auto start = Clock::now();
    const e1::E1Params p = e1::make_params(q, n);
    SweepSpec spec;
    for (const Word& x : all_words(q, n, cap)) spec.codewords.push_back(e1::e1_encode(x, p));
    spec.ball = [](const Word& c) { return absorption_ball(c, 1); };
    spec.decode = [p](const Word&, const Word& y) { return e1::e1_encode(e1::e1_decode(y, p), p); };
    Scope scope{q, n, 1, {{"family", "systematic encoder, all messages"}, {"delta", p.marker.delta}, {"L", p.L}, {"length", p.length()}}};
    return make_report("e1", std::move(scope), run(spec, parallel), start);
}

VerificationReport verify(const std::string& codeId, int q, std::size_t n, std::size_t t, std::size_t delta,
                          std::uint64_t cap, bool parallel) {
    if (codeId == "vt") return verify_vt(n, cap, parallel);
    if (codeId == "basic") return verify_basic(q, n, cap, parallel);
    if (codeId == "improved") return verify_improved(q, n, delta, cap, parallel);
    if (codeId == "multi") return verify_multi(q, n, t, cap, parallel);
    if (codeId == "e1") return verify_e1(q, n, cap, parallel);
    throw DomainError("unknown code id '" + codeId + "' (vt, basic, improved, multi, e1)");
}

nlohmann::json to_json(const VerificationReport& r, bool withTiming) {
    nlohmann::json failures = nlohmann::json::array();
    for (const Failure& f : r.failures) {
        failures.push_back({{"codeword", f.codeword.str()},
                            {"corrupted", f.corrupted.str()},
                            {"decoded", f.decoded ? nlohmann::json(f.decoded->str()) : nlohmann::json(nullptr)},
                            {"reason", f.reason}});
    }
    nlohmann::json j{{"schema", kReportSchema},
                     {"codeId", r.codeId},
                     {"scope", {{"q", r.scope.q}, {"n", r.scope.n}, {"t", r.scope.t}, {"params", r.scope.params}}},
                     {"totals",
                      {{"codewords", r.totalCodewords},
                       {"corruptions", r.totalCorruptions},
                       {"classes", r.totalClasses},
                       {"failures", r.failureCount}}},
                     {"passed", r.passed()},
                     {"failures", failures}};
    if (withTiming) j["wallTime"] = r.wallTime;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema").get<std::string>() != kReportSchema) throw DomainError("unsupported report schema");
        VerificationReport r;
        r.codeId = j.at("codeId").get<std::string>();
        const auto& s = j.at("scope");
        r.scope = {s.at("q").get<int>(), s.at("n").get<std::size_t>(), s.at("t").get<std::size_t>(), s.at("params")};
        const auto& t = j.at("totals");
        r.totalCodewords = t.at("codewords").get<std::uint64_t>();
        r.totalCorruptions = t.at("corruptions").get<std::uint64_t>();
        r.totalClasses = t.at("classes").get<std::uint64_t>();
        r.failureCount = t.at("failures").get<std::uint64_t>();
        for (const auto& f : j.at("failures")) {
            Failure x{Word::parse(f.at("codeword").get<std::string>(), r.scope.q),
                      Word::parse(f.at("corrupted").get<std::string>(), r.scope.q), std::nullopt,
                      f.at("reason").get<std::string>()};
            if (!f.at("decoded").is_null()) x.decoded = Word::parse(f.at("decoded").get<std::string>(), r.scope.q);
            r.failures.push_back(std::move(x));
        }
        if (j.contains("wallTime")) r.wallTime = j.at("wallTime").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed verification report: ") + e.what());
    }
}

std::string to_tsv(const VerificationReport& r) {
    std::ostringstream out;
    out << "codeId\tq\tn\tt\tcodewords\tcorruptions\tclasses\tfailures\tpassed\n";
    out << r.codeId << '\t' << r.scope.q << '\t' << r.scope.n << '\t' << r.scope.t << '\t' << r.totalCodewords << '\t'
        << r.totalCorruptions << '\t' << r.totalClasses << '\t' << r.failureCount << '\t' << (r.passed() ? "yes" : "no") << '\n';
    for (const Failure& f : r.failures) {
        out << "failure\t" << f.codeword.str() << '\t' << f.corrupted.str() << '\t' << (f.decoded ? f.decoded->str() : "-")
            << '\t' << f.reason << '\n';
    }
    return out.str();
}

std::string to_human(const VerificationReport& r) {
    std::ostringstream out;
    out << "code " << r.codeId << "  q=" << r.scope.q << " n=" << r.scope.n << " t=" << r.scope.t << '\n';
    out << "  codewords    " << r.totalCodewords << '\n';
    out << "  classes      " << r.totalClasses << '\n';
    out << "  corruptions  " << r.totalCorruptions << '\n';
    out << "  failures     " << r.failureCount << '\n';
    for (const Failure& f : r.failures) {
        out << "    " << f.codeword.str() << " -> " << f.corrupted.str() << " decoded "
            << (f.decoded ? f.decoded->str() : "(error)") << ": " << f.reason << '\n';
    }
    out << "  wall time    " << r.wallTime << " s\n";
    out << (r.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

} // namespace absorb::sweep
