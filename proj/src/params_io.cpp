#include "absorb/params_io.hpp"

#include "absorb/errors.hpp"

#include <fstream>
#include <memory>

namespace absorb::params_io {
namespace {

template <class T>
T field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw DomainError(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad field '") + name + "': " + e.what());
    }
}

void expect_kind(const json& j, const char* kind) {
    const auto k = field<std::string>(j, "kind");
    if (k != kind) throw DomainError("expected a " + std::string(kind) + " document, got " + k);
}

} // namespace

json to_json(const basic::BasicParams& p) {
    json j{{"kind", "basic"}, {"q", p.q}, {"n", p.n}, {"s", p.s}, {"t1", p.t1}, {"t2", p.t2}, {"d1", p.d1}, {"d2", p.d2}};
    if (!(p.moduli == basic::natural_moduli(p.q, p.n))) {
        j["moduli"] = {{"descent", p.moduli.descent}, {"syn", p.moduli.syn}, {"loc", p.moduli.loc}};
    }
    return j;
}

basic::BasicParams basic_from_json(const json& j) {
    expect_kind(j, "basic");
    basic::BasicParams p;
    p.q = field<int>(j, "q");
    p.n = field<std::size_t>(j, "n");
    p.s = field<std::vector<std::uint32_t>>(j, "s");
    p.t1 = field<std::uint64_t>(j, "t1");
    p.t2 = field<std::uint64_t>(j, "t2");
    p.d1 = field<std::uint64_t>(j, "d1");
    p.d2 = field<std::uint64_t>(j, "d2");
    if (j.contains("moduli")) {
        const json& m = j.at("moduli");
        p.moduli = {field<std::uint64_t>(m, "descent"), field<std::uint64_t>(m, "syn"), field<std::uint64_t>(m, "loc")};
    } else {
        require_alphabet(p.q);
        p.moduli = basic::natural_moduli(p.q, p.n);
    }
    basic::validate(p);
    return p;
}

json to_json(const improved::BlockSyndrome& s) {
    return {{"counts", s.counts}, {"descent", s.descent}, {"inv", s.inv}, {"syn", s.syn}, {"loc", s.loc}};
}

improved::BlockSyndrome block_syndrome_from_json(const json& j) {
    improved::BlockSyndrome s;
    s.counts = field<std::vector<std::uint32_t>>(j, "counts");
    s.descent = field<std::uint64_t>(j, "descent");
    s.inv = field<std::uint64_t>(j, "inv");
    s.syn = field<std::uint64_t>(j, "syn");
    s.loc = field<std::uint64_t>(j, "loc");
    return s;
}

json to_json(const improved::ImprovedParams& p) {
    return {{"kind", "improved"}, {"q", p.q},   {"n", p.n},   {"delta", p.delta},          {"L", p.L},
            {"r1", p.r1},         {"r2", p.r2}, {"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}};
}

improved::ImprovedParams improved_from_json(const json& j) {
    expect_kind(j, "improved");
    improved::ImprovedParams p;
    p.q = field<int>(j, "q");
    p.n = field<std::size_t>(j, "n");
    p.delta = field<std::size_t>(j, "delta");
    p.L = field<std::size_t>(j, "L");
    p.r1 = field<std::uint64_t>(j, "r1");
    p.r2 = field<std::uint64_t>(j, "r2");
    p.alpha = block_syndrome_from_json(j.at("alpha"));
    p.beta = block_syndrome_from_json(j.at("beta"));
    improved::validate(p);
    return p;
}

json to_json(const marker::MarkerParams& p) { return {{"kind", "marker"}, {"q", p.q}, {"n", p.n}, {"delta", p.delta}}; }

marker::MarkerParams marker_from_json(const json& j) {
    expect_kind(j, "marker");
    marker::MarkerParams p{field<int>(j, "q"), field<std::size_t>(j, "n"), field<std::size_t>(j, "delta")};
    marker::validate(p);
    return p;
}

json to_json(const multi::MultiParams& p, std::uint64_t pmax) {
    if (!p.sep) throw DomainError("multi parameters need a separating function");
    const SeparatingFunction& sep = *p.sep;
    if (sep.table().empty()) throw DomainError("only table-backed separating functions can be stored");
    json table = json::object();
    for (std::uint64_t i = 0; i < sep.table().size(); ++i) table[word_from_index(sep.q(), sep.n(), i).str()] = sep.table()[i];
    return {{"kind", "multi"},
            {"base", to_json(p.base)},
            {"t", p.t},
            {"N", p.N},
            {"a", {{"residue", p.a.residue}, {"modulus", p.a.modulus}}},
            {"Pmax", pmax},
            {"separating", {{"contract", sep.contract()}, {"q", sep.q()}, {"n", sep.n()}, {"t", sep.t()}, {"labels", table}}}};
}

MultiRecord multi_from_json(const json& j) {
    expect_kind(j, "multi");
    MultiRecord r;
    r.params.base = improved_from_json(j.at("base"));
    r.params.t = field<std::size_t>(j, "t");
    r.params.N = field<std::uint64_t>(j, "N");
    const json& a = j.at("a");
    r.params.a = {field<std::uint64_t>(a, "residue"), field<std::uint64_t>(a, "modulus")};
    r.pmax = field<std::uint64_t>(j, "Pmax");
    const json& s = j.at("separating");
    const int q = field<int>(s, "q");
    const auto n = field<std::size_t>(s, "n");
    const auto t = field<std::size_t>(s, "t");
    if (field<std::string>(s, "contract") != SeparatingFunction::kDsContract) throw DomainError("unsupported separating contract");
    const std::uint64_t total = word_space_size(q, n, std::uint64_t{1} << 24);
    std::vector<std::uint64_t> labels(total, 0);
    std::vector<bool> seen(total, false);
    const json& table = s.at("labels");
    if (!table.is_object()) throw DomainError("label table must be an object");
    for (const auto& [key, value] : table.items()) {
        const Word u = Word::parse(key, q);
        if (u.size() != n) throw DomainError("label table word has the wrong length: " + key);
        const std::uint64_t i = word_index(u);
        labels[i] = value.get<std::uint64_t>();
        seen[i] = true;
    }
    for (bool b : seen) {
        if (!b) throw DomainError("label table does not cover every word");
    }
    r.params.sep = std::make_shared<const SeparatingFunction>(SeparatingFunction::from_table(q, n, t, std::move(labels)));
    if (r.params.a.modulus == 0 || r.params.a.modulus > r.pmax || r.params.a.residue >= r.params.a.modulus) {
        throw DomainError("target label is not a valid (residue, modulus) pair");
    }
    return r;
}

json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

void write_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace absorb::params_io
