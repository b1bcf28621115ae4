#ifndef ABSORB_SWEEP_HPP
#define ABSORB_SWEEP_HPP

#include "absorb/word.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace absorb::sweep {

inline constexpr const char* kReportSchema = "absorb.verification/1";

/// One bad outcome. `decoded` is empty when the decoder threw; for a ball
/// overlap it holds the second codeword.
struct Failure {
    Word codeword;
    Word corrupted;
    std::optional<Word> decoded;
    std::string reason;
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct Scope {
    int q = 2;
    std::size_t n = 0;
    std::size_t t = 1;
    nlohmann::json params; // parameter tuple or family description
};

struct VerificationReport {
    std::string codeId;
    Scope scope;
    std::uint64_t totalCodewords = 0;
    std::uint64_t totalCorruptions = 0;
    std::uint64_t totalClasses = 0;
    std::uint64_t failureCount = 0; // may exceed failures.size()
    std::vector<Failure> failures;
    double wallTime = 0.0; // seconds

    bool passed() const { return failureCount == 0 && failures.empty(); }
};

/// What one sweep enumerates. Codewords sharing a class key form one code;
/// balls are checked for overlaps inside a class.
struct SweepSpec {
    std::vector<Word> codewords;
    std::function<std::vector<Word>(const Word&)> ball;
    // Decodes y as a corruption of some codeword in the class of `codeword`.
    std::function<Word(const Word& codeword, const Word& y)> decode;
    std::function<std::uint64_t(const Word&)> classKey;
    bool checkDisjoint = true;
    std::size_t maxFailures = 100; // recorded failures are capped, counting is not
};

struct SweepCounts {
    std::uint64_t codewords = 0;
    std::uint64_t corruptions = 0;
    std::uint64_t classes = 0;
    std::uint64_t failureCount = 0;
    std::vector<Failure> failures; // canonically sorted
};

// Same result either way; the parallel kernel splits codewords over OpenMP threads.
SweepCounts run_sweep(const SweepSpec& spec);
SweepCounts run_sweep_serial(const SweepSpec& spec);

// Exhaustive sweeps of the shipped codes. `cap` bounds the number of words
// enumerated (ResourceLimit beyond it).
VerificationReport verify_vt(std::size_t n, std::uint64_t cap, bool parallel = true);
VerificationReport verify_basic(int q, std::size_t n, std::uint64_t cap, bool parallel = true);
VerificationReport verify_improved(int q, std::size_t n, std::size_t delta, std::uint64_t cap, bool parallel = true);
// t-absorption labelled subcodes of every improved class, brute-force separating function.
VerificationReport verify_multi(int q, std::size_t n, std::size_t t, std::uint64_t cap, bool parallel = true);
VerificationReport verify_e1(int q, std::size_t n, std::uint64_t cap, bool parallel = true);
// Dispatch on codeId: vt, basic, improved, multi, e1. delta is used by improved only.
VerificationReport verify(const std::string& codeId, int q, std::size_t n, std::size_t t, std::size_t delta,
                          std::uint64_t cap, bool parallel = true);

nlohmann::json to_json(const VerificationReport& r, bool withTiming = true);
VerificationReport report_from_json(const nlohmann::json& j);

// Tab-separated summary followed by one line per recorded failure.
std::string to_tsv(const VerificationReport& r);
std::string to_human(const VerificationReport& r);

} // namespace absorb::sweep

#endif
