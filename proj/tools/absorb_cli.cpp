#include "absorb/basic_code.hpp"
#include "absorb/bounds.hpp"
#include "absorb/channel.hpp"
#include "absorb/e1.hpp"
#include "absorb/e2.hpp"
#include "absorb/errors.hpp"
#include "absorb/improved.hpp"
#include "absorb/marker.hpp"
#include "absorb/multi.hpp"
#include "absorb/params_io.hpp"
#include "absorb/separating.hpp"
#include "absorb/stats.hpp"
#include "absorb/sweep.hpp"
#include "absorb/vt.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace absorb;
using json = nlohmann::json;

enum Exit : int { kPass = 0, kFailures = 1, kUsage = 2, kCap = 3 };

struct Options {
    int q = 3;
    std::size_t n = 0;
    std::size_t t = 1;
    std::size_t delta = 0;
    std::uint64_t a = 0;
    std::uint64_t seed = 1;
    std::uint64_t cap = std::uint64_t{1} << 22;
    std::size_t from = 0;
    std::size_t to = 0;
    std::string params;
    std::string format = "human";
    std::string mode = "absorption";
    std::string pattern;
    std::string code;
    std::string what = "bound";
    std::string word;
    bool bruteForce = false;
    bool fixedConstants = false;
    bool serial = false;
    bool noTiming = false;
};

/// Rows of strings rendered as an aligned table, TSV or an array of objects.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    json to_json() const {
        json out = json::array();
        for (const auto& r : rows) {
            json o = json::object();
            for (std::size_t c = 0; c < header.size(); ++c) o[header[c]] = r[c];
            out.push_back(o);
        }
        return out;
    }
    std::string to_tsv() const {
        std::ostringstream out;
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "\t" : "") << r[c];
            out << '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out.str();
    }
    std::string to_human() const {
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) {
            width[c] = header[c].size();
            for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
        }
        std::ostringstream out;
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << r[c];
            out << '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out.str();
    }
};

// Prints a flat record: JSON object, key<TAB>value lines, or "key: value".
void emit(const Options& o, const json& j) {
    if (o.format == "json") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    for (const auto& [k, v] : j.items()) {
        const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
        std::cout << k << (o.format == "tsv" ? "\t" : ": ") << text << '\n';
    }
}

void emit_table(const Options& o, const Table& t) {
    if (o.format == "json") {
        std::cout << t.to_json().dump(2) << '\n';
    } else if (o.format == "tsv") {
        std::cout << t.to_tsv();
    } else {
        std::cout << t.to_human();
    }
}

Word read_word(const Options& o) { return Word::parse(o.word, o.q); }

std::string rational_text(const bounds::cpp_rational& r) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << static_cast<double>(r);
    return out.str();
}

// channel corrupt

int cmd_corrupt(const Options& o) {
    const Word x = read_word(o);
    json out{{"input", x.str()}, {"mode", o.mode}};
    Word y;
    if (o.mode == "deletion") {
        std::vector<std::size_t> positions;
        if (!o.pattern.empty()) {
            std::stringstream in(o.pattern);
            std::string item;
            while (std::getline(in, item, ',')) {
                try {
                    positions.push_back(std::stoul(item));
                } catch (const std::exception&) {
                    throw InvalidPattern("bad deletion position '" + item + "'");
                }
            }
        } else {
            if (o.t >= x.size()) throw DomainError("t must be below the word length");
            std::mt19937_64 rng(o.seed);
            positions = random_positions(x.size(), o.t, rng);
        }
        if (positions.size() >= x.size()) throw DomainError("t must be below the word length");
        y = delete_positions(x, positions);
        std::string text;
        for (std::size_t i = 0; i < positions.size(); ++i) text += (i ? "," : "") + std::to_string(positions[i]);
        out["pattern"] = text;
    } else if (o.mode == "absorption" || o.mode == "contraction") {
        AbsorptionPattern p;
        if (!o.pattern.empty()) {
            p = parse_pattern(o.pattern);
        } else {
            if (o.t >= x.size()) throw DomainError("t must be below the word length");
            std::mt19937_64 rng(o.seed);
            p = random_pattern(x.size(), o.t, rng);
        }
        y = o.mode == "absorption" ? apply_absorptions(x, p) : apply_contraction(x, p);
        out["pattern"] = format_pattern(p);
    } else {
        throw DomainError("unknown mode '" + o.mode + "'");
    }
    out["output"] = y.str();
    if (o.format == "human") {
        std::cout << y.str() << "\npattern " << out["pattern"].get<std::string>() << '\n';
    } else {
        emit(o, out);
    }
    return kPass;
}

// ball enumerate

int cmd_ball(const Options& o) {
    const Word x = read_word(o);
    if (o.t >= x.size()) throw DomainError("t must be below the word length");
    std::vector<Word> ball;
    if (o.mode == "absorption") {
        ball = absorption_ball(x, o.t);
    } else if (o.mode == "contraction") {
        ball = contraction_ball(x, o.t);
    } else if (o.mode == "deletion") {
        ball = deletion_ball(x, o.t);
    } else if (o.mode == "ds") {
        ball = ds_ball(x, o.t);
    } else {
        throw DomainError("unknown mode '" + o.mode + "'");
    }
    if (ball.size() > o.cap) throw ResourceLimit("ball has more than " + std::to_string(o.cap) + " words");
    if (o.format == "json") {
        json words = json::array();
        for (const Word& y : ball) words.push_back(y.str());
        std::cout << json{{"input", x.str()}, {"t", o.t}, {"mode", o.mode}, {"size", ball.size()}, {"words", words}}.dump(2)
                  << '\n';
    } else {
        for (const Word& y : ball) std::cout << y.str() << '\n';
        if (o.format == "human") std::cout << "(" << ball.size() << " words)\n";
    }
    return kPass;
}

// code encode | decode | check | params

multi::MultiCode multi_code_from(const params_io::MultiRecord& r) {
    return multi::make_multi_code(r.params.base, r.params.t, *r.params.sep);
}

json load_params(const Options& o) {
    if (o.params.empty()) throw DomainError("--params <file> is required for code '" + o.code + "'");
    return params_io::read_file(o.params);
}

int cmd_encode(const Options& o) {
    const Word x = read_word(o);
    Word c;
    if (o.code == "vt") {
        if (o.q != 2) throw DomainError("the VT encoder is binary; pass --q 2");
        c = vt::vt_systematic_encode(x);
    } else if (o.code == "e1") {
        c = e1::e1_encode(x, e1::make_params(o.q, x.size()));
    } else if (o.code == "e2") {
        const e2::E2Code code(e1::make_params(o.q, x.size()), std::max<std::size_t>(o.t, 2), o.cap);
        c = code.encode(x);
    } else {
        throw DomainError("encode supports vt, e1, e2");
    }
    emit(o, {{"message", x.str()}, {"codeword", c.str()}, {"length", c.size()}, {"redundancy", c.size() - x.size()}});
    return kPass;
}

int cmd_decode(const Options& o) {
    const Word y = read_word(o);
    json out{{"received", y.str()}};
    if (o.code == "vt") {
        if (o.n == 0) {
            out["message"] = vt::vt_systematic_decode(y).str();
        } else {
            out["codeword"] = vt::absorption_decode_binary(y, {o.n, o.a}).str();
        }
    } else if (o.code == "e1") {
        if (o.n == 0) throw DomainError("--n (message length) is required");
        out["message"] = e1::e1_decode(y, e1::make_params(o.q, o.n)).str();
    } else if (o.code == "e2") {
        if (o.n == 0) throw DomainError("--n (message length) is required");
        const e2::E2Code code(e1::make_params(o.q, o.n), std::max<std::size_t>(o.t, 2), o.cap);
        out["message"] = code.decode(y).str();
    } else if (o.code == "basic") {
        out["codeword"] = basic::decode_single_absorption(y, params_io::basic_from_json(load_params(o))).str();
    } else if (o.code == "improved") {
        out["codeword"] = improved::decode_improved(y, params_io::improved_from_json(load_params(o))).str();
    } else if (o.code == "multi") {
        const auto rec = params_io::multi_from_json(load_params(o));
        out["codeword"] = multi::decode_t_absorptions(y, multi_code_from(rec), rec.params).str();
    } else {
        throw DomainError("decode supports vt, e1, e2, basic, improved, multi");
    }
    emit(o, out);
    return kPass;
}

int cmd_check(const Options& o) {
    const Word x = read_word(o);
    bool member = false;
    if (o.code == "vt") {
        member = vt::vt_membership(x, {o.n == 0 ? x.size() : o.n, o.a});
    } else if (o.code == "basic") {
        member = basic::code_membership(x, params_io::basic_from_json(load_params(o)));
    } else if (o.code == "improved") {
        member = improved::d_membership(x, params_io::improved_from_json(load_params(o)));
    } else if (o.code == "multi") {
        const auto rec = params_io::multi_from_json(load_params(o));
        member = multi::e_membership(x, multi_code_from(rec), rec.params);
    } else {
        throw DomainError("check supports vt, basic, improved, multi");
    }
    emit(o, {{"word", x.str()}, {"member", member}});
    return member ? kPass : kFailures;
}

int cmd_params(const Options& o) {
    const Word x = read_word(o);
    json j;
    if (o.code == "basic") {
        j = params_io::to_json(basic::params_of(x));
    } else if (o.code == "improved") {
        j = params_io::to_json(improved::params_of(x, o.delta == 0 ? x.size() : o.delta));
    } else if (o.code == "multi") {
        const improved::ImprovedParams base = improved::params_of(x, o.delta == 0 ? x.size() : o.delta);
        const SeparatingFunction sep = brute_force_separating_function(x.size(), x.q(), std::max<std::size_t>(o.t, 2), o.cap);
        const multi::MultiCode code = multi::make_multi_code(base, sep.t(), sep);
        j = params_io::to_json(multi::make_multi_params(code, base, code.fbar(x)), code.pmax());
    } else {
        throw DomainError("params supports basic, improved, multi");
    }
    std::cout << j.dump(2) << '\n';
    return kPass;
}

// verify

int cmd_verify(const Options& o) {
    const int q = o.code == "vt" ? 2 : o.q;
    const std::size_t t = o.code == "multi" ? std::max<std::size_t>(o.t, 2) : o.t;
    const std::size_t delta = o.delta == 0 ? o.n : o.delta;
    const sweep::VerificationReport r = sweep::verify(o.code, q, o.n, t, delta, o.cap, !o.serial);
    if (o.format == "json") {
        std::cout << sweep::to_json(r, !o.noTiming).dump(2) << '\n';
    } else if (o.format == "tsv") {
        std::cout << sweep::to_tsv(r);
    } else {
        std::cout << sweep::to_human(r);
    }
    return r.passed() ? kPass : kFailures;
}

// bound and table

json bound_json(const bounds::BoundReport& r) {
    json j{{"q", r.q}, {"n", r.n}, {"transversal", r.transversal.str()}, {"transversalApprox", static_cast<double>(r.transversal)}};
    if (r.formula) {
        j["formula"] = {{"a", r.formula->a.str()}, {"cmax", r.formula->cmax.str()}};
    } else {
        j["formula"] = nullptr;
    }
    j["bruteForce"] = r.bruteForce ? json(*r.bruteForce) : json(nullptr);
    return j;
}

int cmd_bound(const Options& o) {
    const bounds::BoundReport r = bounds::bound_report(o.q, o.n, o.bruteForce, o.cap);
    if (o.format == "json") {
        std::cout << bound_json(r).dump(2) << '\n';
        return kPass;
    }
    Table t{{"q", "n", "formula_a", "formula_cmax", "tau_star", "brute_force"}, {}};
    t.rows.push_back({std::to_string(r.q), std::to_string(r.n), r.formula ? r.formula->a.str() : "-",
                      r.formula ? r.formula->cmax.str() : "-", rational_text(r.transversal),
                      r.bruteForce ? std::to_string(*r.bruteForce) : "-"});
    emit_table(o, t);
    return kPass;
}

Table bound_table(const Options& o) {
    Table t{{"n", "formula_a", "tau_star", "tau_star_displayed", "brute_force"}, {}};
    for (std::size_t n = std::max<std::size_t>(o.from, 2); n <= o.to; ++n) {
        std::string formula = "-";
        if (n >= 12 && n >= static_cast<std::size_t>(o.q)) formula = bounds::closed_form_bound(o.q, n).a.str();
        std::string brute = "-";
        if (o.bruteForce) {
            try {
                brute = std::to_string(bounds::brute_force_optimum(o.q, n, o.cap));
            } catch (const ResourceLimit&) {
            }
        }
        t.rows.push_back({std::to_string(n), formula, rational_text(bounds::fractional_transversal_value(o.q, n)),
                          rational_text(bounds::displayed_transversal_value(o.q, n)), brute});
    }
    return t;
}

Table count_table(const Options& o) {
    Table t{{"n", "k", "displayed", "exact", "enumerated", "displayed_matches"}, {}};
    for (std::size_t n = std::max<std::size_t>(o.from, 2); n <= o.to; ++n) {
        std::map<std::size_t, std::uint64_t> byRuns;
        bool enumerated = false;
        try {
            const std::uint64_t total = word_space_size(o.q, n - 1, o.cap);
            for (std::uint64_t i = 0; i < total; ++i) ++byRuns[zero_run_count(word_from_index(o.q, n - 1, i))];
            enumerated = true;
        } catch (const ResourceLimit&) {
        }
        for (std::size_t k = 1; k <= n / 2; ++k) {
            const auto shown = bounds::zero_run_class_count(n, o.q, k);
            const auto exact = bounds::zero_run_class_count_exact(n, o.q, k);
            t.rows.push_back({std::to_string(n), std::to_string(k), shown.str(), exact.str(),
                              enumerated ? std::to_string(byRuns[k]) : "-", shown == exact ? "yes" : "no"});
        }
    }
    return t;
}

Table redundancy_table(const Options& o) {
    Table t{{"n", "delta", "L", "length", "redundancy", "measured_zero", "measured_random"}, {}};
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> sym(0, o.q - 1);
    for (std::size_t n = std::max<std::size_t>(o.from, 1); n <= o.to; ++n) {
        const e1::E1Params p = e1::make_params(o.q, n);
        std::vector<Symbol> s(n);
        for (auto& v : s) v = static_cast<Symbol>(sym(rng));
        const Word zero = Word::zeros(o.q, n);
        const Word random(o.q, std::move(s));
        const Word cz = e1::e1_encode(zero, p);
        const Word cr = e1::e1_encode(random, p);
        if (e1::e1_decode(cz, p) != zero || e1::e1_decode(cr, p) != random) throw InternalInconsistency("round trip failed");
        t.rows.push_back({std::to_string(n), std::to_string(p.marker.delta), std::to_string(p.L), std::to_string(p.length()),
                          std::to_string(p.redundancy()), std::to_string(cz.size() - n), std::to_string(cr.size() - n)});
    }
    return t;
}

int cmd_table(const Options& o) {
    if (o.to < o.from) throw DomainError("--to must be at least --from");
    if (o.what == "bound") {
        emit_table(o, bound_table(o));
    } else if (o.what == "count") {
        emit_table(o, count_table(o));
    } else if (o.what == "redundancy") {
        emit_table(o, redundancy_table(o));
    } else {
        throw DomainError("--what must be bound, count or redundancy");
    }
    return kPass;
}

// marker and improved

marker::MarkerParams marker_params(const Options& o, std::size_t n) {
    if (o.delta != 0) {
        marker::MarkerParams p{o.q, n, o.delta};
        marker::validate(p);
        return p;
    }
    return o.fixedConstants ? marker::encoder_params(o.q, n) : marker::minimal_params(o.q, n);
}

int cmd_marker_encode(const Options& o) {
    const Word x = read_word(o);
    const marker::MarkerParams p = marker_params(o, o.n == 0 ? x.size() : o.n);
    if (p.n != x.size()) throw DomainError("--n must equal the message length");
    const Word c = marker::encode_to_marker_set(x, p);
    emit(o, {{"message", x.str()}, {"encoded", c.str()}, {"delta", p.delta}});
    return kPass;
}

int cmd_marker_decode(const Options& o) {
    const Word c = read_word(o);
    if (c.size() < 5) throw DomainError("encoded word is too short");
    const marker::MarkerParams p = marker_params(o, o.n == 0 ? c.size() - 5 : o.n);
    emit(o, {{"encoded", c.str()}, {"message", marker::decode_from_marker_set(c, p).str()}, {"delta", p.delta}});
    return kPass;
}

int cmd_improved_encode(const Options& o) {
    const Word x = read_word(o);
    const std::size_t delta = o.delta == 0 ? 12 : o.delta;
    if (!marker::r_membership(x, delta)) throw DomainError("word is not in the marker-constrained set for this delta");
    std::cout << params_io::to_json(improved::params_of(x, delta)).dump(2) << '\n';
    return kPass;
}

int cmd_improved_decode(const Options& o) {
    const Word y = read_word(o);
    const improved::ImprovedParams p = params_io::improved_from_json(load_params(o));
    emit(o, {{"received", y.str()}, {"codeword", improved::decode_improved(y, p).str()}});
    return kPass;
}

// CLI wiring

void add_format(CLI::App* app, Options& o) {
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv", "human"}));
}

void add_word(CLI::App* app, Options& o) { app->add_option("word", o.word, "Word in the alphabet text format")->required(); }

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Codes for the absorption channel: encode, decode, corrupt and verify"};
    app.require_subcommand(1);
    int (*handler)(const Options&) = nullptr;
    auto on = [&](CLI::App* sub, int (*fn)(const Options&)) { sub->callback([&handler, fn] { handler = fn; }); };

    auto* channel = app.add_subcommand("channel", "Channel operations");
    channel->require_subcommand(1);
    auto* corrupt = channel->add_subcommand("corrupt", "Apply t errors to a word");
    corrupt->add_option("--q", o.q, "Alphabet size")->required();
    corrupt->add_option("--t", o.t, "Number of errors");
    corrupt->add_option("--mode", o.mode, "absorption, contraction or deletion");
    corrupt->add_option("--seed", o.seed, "Seed for a random pattern");
    corrupt->add_option("--pattern", o.pattern, "Explicit pattern t';start:count,... (deletion: positions p,q,...)");
    add_format(corrupt, o);
    add_word(corrupt, o);
    on(corrupt, cmd_corrupt);

    auto* ball = app.add_subcommand("ball", "Error balls");
    ball->require_subcommand(1);
    auto* enumerate = ball->add_subcommand("enumerate", "List a ball");
    enumerate->add_option("--q", o.q, "Alphabet size")->required();
    enumerate->add_option("--t", o.t, "Radius");
    enumerate->add_option("--mode", o.mode, "absorption, contraction, deletion or ds");
    enumerate->add_option("--cap", o.cap, "Largest ball to print");
    add_format(enumerate, o);
    add_word(enumerate, o);
    on(enumerate, cmd_ball);

    auto* code = app.add_subcommand("code", "Encode, decode and check codewords");
    code->require_subcommand(1);
    struct CodeSub {
        const char* name;
        const char* help;
        int (*fn)(const Options&);
    };
    for (const CodeSub& s : {CodeSub{"encode", "Systematic encoders: vt, e1, e2", cmd_encode},
                             CodeSub{"decode", "Decoders: vt, e1, e2, basic, improved, multi", cmd_decode},
                             CodeSub{"check", "Membership: vt, basic, improved, multi (exit 1 if not a member)", cmd_check},
                             CodeSub{"params", "Parameter file of the class containing a word: basic, improved, multi", cmd_params}}) {
        auto* sub = code->add_subcommand(s.name, s.help);
        sub->add_option("--code", o.code, "Code family")->required();
        sub->add_option("--q", o.q, "Alphabet size");
        sub->add_option("--n", o.n, "Length (message length for e1, e2)");
        sub->add_option("--t", o.t, "Number of absorptions (e2, multi)");
        sub->add_option("--a", o.a, "VT residue");
        sub->add_option("--delta", o.delta, "Segment cap (improved, multi)");
        sub->add_option("--params", o.params, "Parameter file (JSON)");
        sub->add_option("--cap", o.cap, "Enumeration cap");
        add_format(sub, o);
        add_word(sub, o);
        on(sub, s.fn);
    }

    auto* verify = app.add_subcommand("verify", "Exhaustive decode and ball-disjointness sweep");
    verify->add_option("--code", o.code, "vt, basic, improved, multi or e1")->required();
    verify->add_option("--q", o.q, "Alphabet size");
    verify->add_option("--n", o.n, "Length (message length for e1)")->required();
    verify->add_option("--t", o.t, "Number of absorptions (multi)");
    verify->add_option("--delta", o.delta, "Segment cap (improved; defaults to n)");
    verify->add_option("--seed", o.seed, "Unused by exhaustive sweeps; accepted for uniformity");
    verify->add_option("--cap", o.cap, "Largest number of words to enumerate");
    verify->add_flag("--serial", o.serial, "Use the serial reference kernel");
    verify->add_flag("--no-timing", o.noTiming, "Omit wall time from JSON");
    add_format(verify, o);
    on(verify, cmd_verify);

    auto* bound = app.add_subcommand("bound", "Upper bound on codes correcting one deletion of 0");
    bound->add_option("--q", o.q, "Alphabet size")->required();
    bound->add_option("--n", o.n, "Length")->required();
    bound->add_flag("--brute-force", o.bruteForce, "Also compute the exact optimum");
    bound->add_option("--cap", o.cap, "Largest vertex count for the exact optimum");
    add_format(bound, o);
    on(bound, cmd_bound);

    auto* table = app.add_subcommand("table", "Tables over a range of n");
    table->add_option("--what", o.what, "bound, count or redundancy")->check(CLI::IsMember({"bound", "count", "redundancy"}));
    table->add_option("--q", o.q, "Alphabet size");
    table->add_option("--from", o.from, "First n")->required();
    table->add_option("--to", o.to, "Last n")->required();
    table->add_option("--seed", o.seed, "Seed for the random message (redundancy)");
    table->add_option("--cap", o.cap, "Enumeration cap");
    table->add_flag("--brute-force", o.bruteForce, "Add exact optima where feasible (bound)");
    add_format(table, o);
    on(table, cmd_table);

    auto* mark = app.add_subcommand("marker", "Encoder into the marker-constrained set");
    mark->require_subcommand(1);
    for (auto [name, fn] : {std::pair{"encode", cmd_marker_encode}, std::pair{"decode", cmd_marker_decode}}) {
        auto* sub = mark->add_subcommand(name, name == std::string("encode") ? "Encode a message" : "Decode an encoded word");
        sub->add_option("--q", o.q, "Alphabet size")->required();
        sub->add_option("--n", o.n, "Message length");
        sub->add_option("--delta", o.delta, "Segment cap (default: smallest valid)");
        sub->add_flag("--fixed-constants", o.fixedConstants, "Use delta = c1 + c2 ceil(log_q n)");
        add_format(sub, o);
        add_word(sub, o);
        on(sub, fn);
    }

    auto* imp = app.add_subcommand("improved", "Single-absorption code with window localization");
    imp->require_subcommand(1);
    auto* impEnc = imp->add_subcommand("encode", "Parameter file of the class containing a word");
    impEnc->add_option("--q", o.q, "Alphabet size")->required();
    impEnc->add_option("--n", o.n, "Length (checked against the word)");
    impEnc->add_option("--delta", o.delta, "Segment cap (default 12)");
    add_word(impEnc, o);
    on(impEnc, [](const Options& opt) {
        if (opt.n != 0 && opt.n != opt.word.size()) throw DomainError("--n must equal the word length");
        return cmd_improved_encode(opt);
    });
    auto* impDec = imp->add_subcommand("decode", "Decode one absorption");
    impDec->add_option("--q", o.q, "Alphabet size")->required();
    impDec->add_option("--n", o.n, "Code length");
    impDec->add_option("--delta", o.delta, "Segment cap");
    impDec->add_option("--params", o.params, "Parameter file (JSON)")->required();
    add_format(impDec, o);
    add_word(impDec, o);
    on(impDec, cmd_improved_decode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    }
    try {
        return handler(o);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kCap;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DecodeFailure& e) {
        std::cerr << "decode failure: " << e.what() << '\n';
        return kFailures;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailures;
    }
}
