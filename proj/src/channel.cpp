#include "absorb/channel.hpp"

#include "absorb/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <string>

namespace absorb {
namespace {

void require_symbol(Symbol s, int q) {
    require_alphabet(q);
    if (static_cast<int>(s) >= q) {
        throw DomainError("symbol " + std::to_string(s) + " out of range for q=" + std::to_string(q));
    }
}

void require_ball_radius(const Word& x, std::size_t t) {
    if (t < 1 || t >= x.size()) {
        throw DomainError("ball radius t=" + std::to_string(t) + " requires 1 <= t < |x| = " + std::to_string(x.size()));
    }
}

std::vector<Word> sorted_unique(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

void pattern_events(std::size_t head, std::size_t from, std::size_t extra, AbsorptionPattern& p,
                    const std::function<void(const AbsorptionPattern&)>& fn) {
    if (extra == 0) {
        fn(p);
        return;
    }
    for (std::size_t i = from; i < head; ++i) {
        for (std::size_t s = 1; s <= extra && i + s <= head; ++s) {
            p.events.push_back({i, s});
            pattern_events(head, i + s + 1, extra - s, p, fn);
            p.events.pop_back();
        }
    }
}

std::vector<Word> ball_by_patterns(const Word& x, std::size_t t, MergeRule rule) {
    require_ball_radius(x, t);
    std::vector<Word> out;
    for_each_pattern(x.size(), t, [&](const AbsorptionPattern& p) { out.push_back(apply_pattern(x, p, rule)); });
    return sorted_unique(std::move(out));
}

} // namespace

Symbol saturating_add(Symbol a, Symbol b, int q) {
    require_symbol(a, q);
    require_symbol(b, q);
    return static_cast<Symbol>(std::min(static_cast<int>(a) + b, q - 1));
}

Symbol modular_add(Symbol a, Symbol b, int q) {
    require_symbol(a, q);
    require_symbol(b, q);
    return static_cast<Symbol>((static_cast<int>(a) + b) % q);
}

Symbol merge(MergeRule rule, Symbol a, Symbol b, int q) {
    const int sum = static_cast<int>(a) + b;
    return static_cast<Symbol>(rule == MergeRule::Saturating ? std::min(sum, q - 1) : sum % q);
}

std::size_t AbsorptionPattern::weight() const {
    std::size_t w = tPrime;
    for (const auto& e : events) w += e.count;
    return w;
}

void validate_pattern(const AbsorptionPattern& p, std::size_t n) {
    if (p.weight() >= n) {
        throw InvalidPattern("pattern weight " + std::to_string(p.weight()) + " must be below the word length " +
                             std::to_string(n));
    }
    const std::size_t head = n - p.tPrime;
    for (std::size_t l = 0; l < p.events.size(); ++l) {
        const auto& e = p.events[l];
        if (e.start < 1 || e.count < 1) throw InvalidPattern("event needs start >= 1 and count >= 1");
        if (e.start + e.count > head) {
            throw InvalidPattern("event at " + std::to_string(e.start) + " reaches past position " + std::to_string(head));
        }
        if (l > 0) {
            const auto& prev = p.events[l - 1];
            if (e.start <= prev.start || e.start - prev.start <= prev.count) {
                throw InvalidPattern("events at " + std::to_string(prev.start) + " and " + std::to_string(e.start) +
                                     " overlap");
            }
        }
    }
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw InvalidPattern("bad " + std::string(what) + " '" + std::string(text) + "' in pattern");
    }
    return v;
}

} // namespace

AbsorptionPattern parse_pattern(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw InvalidPattern("pattern needs the form t';start:count,...");
    AbsorptionPattern p;
    p.tPrime = parse_count(text.substr(0, semi), "trailing count");
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw InvalidPattern("event '" + std::string(item) + "' needs start:count");
        p.events.push_back({parse_count(item.substr(0, colon), "start"), parse_count(item.substr(colon + 1), "count")});
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) throw InvalidPattern("trailing comma in pattern");
    }
    return p;
}

std::string format_pattern(const AbsorptionPattern& p) {
    std::string out = std::to_string(p.tPrime) + ";";
    for (std::size_t l = 0; l < p.events.size(); ++l) {
        if (l > 0) out += ',';
        out += std::to_string(p.events[l].start) + ":" + std::to_string(p.events[l].count);
    }
    return out;
}

std::vector<std::size_t> random_positions(std::size_t n, std::size_t t, std::mt19937_64& rng) {
    if (t > n) throw InvalidPattern("cannot pick " + std::to_string(t) + " positions out of " + std::to_string(n));
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{1});
    for (std::size_t i = 0; i < t; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(t);
    std::sort(pool.begin(), pool.end());
    return pool;
}

AbsorptionPattern random_pattern(std::size_t n, std::size_t t, std::mt19937_64& rng) {
    if (t >= n) throw InvalidPattern("pattern weight " + std::to_string(t) + " must be below the word length " + std::to_string(n));
    AbsorptionPattern p;
    p.tPrime = std::uniform_int_distribution<std::size_t>(0, t)(rng);
    const std::size_t head = n - p.tPrime;
    // v in [1, head - 1] merges x_{v+1} into its left neighbour; a run
    // v, ..., v + len - 1 is the event (v, len).
    std::vector<std::size_t> merged = random_positions(head - 1, t - p.tPrime, rng);
    for (std::size_t k = 0; k < merged.size();) {
        std::size_t len = 1;
        while (k + len < merged.size() && merged[k + len] == merged[k] + len) ++len;
        p.events.push_back({merged[k], len});
        k += len;
    }
    validate_pattern(p, n);
    return p;
}

Word delete_positions(const Word& x, const std::vector<std::size_t>& positions) {
    std::vector<bool> drop(x.size(), false);
    for (std::size_t pos : positions) {
        if (pos < 1 || pos > x.size()) throw InvalidPattern("deletion position " + std::to_string(pos) + " out of range");
        if (drop[pos - 1]) throw InvalidPattern("deletion position " + std::to_string(pos) + " repeated");
        drop[pos - 1] = true;
    }
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!drop[i]) out.push_back(x[i]);
    }
    return Word(x.q(), std::move(out));
}

void for_each_pattern(std::size_t n, std::size_t t, const std::function<void(const AbsorptionPattern&)>& fn) {
    if (t >= n) return;
    AbsorptionPattern p;
    for (std::size_t tp = 0; tp <= t; ++tp) {
        p.tPrime = tp;
        p.events.clear();
        pattern_events(n - tp, 1, t - tp, p, fn);
    }
}

Word apply_pattern(const Word& x, const AbsorptionPattern& p, MergeRule rule) {
    validate_pattern(p, x.size());
    const int q = x.q();
    const std::size_t head = x.size() - p.tPrime;
    std::vector<Symbol> out;
    out.reserve(x.size() - p.weight());
    std::size_t pos = 1;
    for (const auto& e : p.events) {
        for (; pos < e.start; ++pos) out.push_back(x.at(pos));
        Symbol acc = x.at(e.start);
        for (std::size_t j = e.start + 1; j <= e.start + e.count; ++j) acc = merge(rule, acc, x.at(j), q);
        out.push_back(acc);
        pos = e.start + e.count + 1;
    }
    for (; pos <= head; ++pos) out.push_back(x.at(pos));
    return Word(q, std::move(out));
}

Word apply_absorptions(const Word& x, const AbsorptionPattern& p) { return apply_pattern(x, p, MergeRule::Saturating); }

Word apply_contraction(const Word& x, const AbsorptionPattern& p) { return apply_pattern(x, p, MergeRule::Modular); }

namespace {
Word single_error(const Word& x, std::size_t i, MergeRule rule) {
    if (x.size() < 2 || i < 1 || i > x.size()) {
        throw InvalidPattern("single error position " + std::to_string(i) + " invalid for length " +
                             std::to_string(x.size()));
    }
    std::vector<Symbol> out(x.symbols().begin(), x.symbols().end() - 1);
    if (i < x.size()) {
        out[i - 1] = merge(rule, x.at(i), x.at(i + 1), x.q());
        std::copy(x.symbols().begin() + static_cast<std::ptrdiff_t>(i) + 1, x.symbols().end(),
                  out.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return Word(x.q(), std::move(out));
}
} // namespace

Word absorb_at(const Word& x, std::size_t i) { return single_error(x, i, MergeRule::Saturating); }

Word contract_at(const Word& x, std::size_t i) { return single_error(x, i, MergeRule::Modular); }

std::vector<Word> absorption_ball(const Word& x, std::size_t t) { return ball_by_patterns(x, t, MergeRule::Saturating); }

std::vector<Word> contraction_ball(const Word& x, std::size_t t) { return ball_by_patterns(x, t, MergeRule::Modular); }

std::vector<Word> deletion_ball(const Word& x, std::size_t t) {
    require_ball_radius(x, t);
    const std::size_t n = x.size();
    std::vector<Word> out;
    std::vector<std::size_t> removed;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (removed.size() == t) {
            std::vector<Symbol> kept;
            kept.reserve(n - t);
            std::size_t r = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (r < removed.size() && removed[r] == i) {
                    ++r;
                    continue;
                }
                kept.push_back(x[i]);
            }
            out.emplace_back(x.q(), std::move(kept));
            return;
        }
        for (std::size_t i = from; i + (t - removed.size()) <= n; ++i) {
            // Deleting any symbol of a run gives the same word; keep the first.
            if (i > from && x[i] == x[i - 1]) continue;
            removed.push_back(i);
            choose(i + 1);
            removed.pop_back();
        }
    };
    choose(0);
    return sorted_unique(std::move(out));
}

namespace {
void hamming_neighbours(std::vector<Symbol>& z, std::size_t from, std::size_t budget, int q,
                        const std::function<void(const std::vector<Symbol>&)>& fn) {
    fn(z);
    if (budget == 0) return;
    for (std::size_t i = from; i < z.size(); ++i) {
        const Symbol orig = z[i];
        for (int s = 0; s < q; ++s) {
            if (s == orig) continue;
            z[i] = static_cast<Symbol>(s);
            hamming_neighbours(z, i + 1, budget - 1, q, fn);
        }
        z[i] = orig;
    }
}
} // namespace

std::vector<Word> ds_ball(const Word& x, std::size_t t) {
    std::set<Word> out;
    for (const Word& z : deletion_ball(x, t)) {
        std::vector<Symbol> buf = z.symbols();
        hamming_neighbours(buf, 0, t, x.q(), [&](const std::vector<Symbol>& w) { out.emplace(x.q(), w); });
    }
    return {out.begin(), out.end()};
}

std::vector<std::uint64_t> ds_ball_indices(const Word& x, std::size_t t) {
    std::vector<std::uint64_t> out;
    const auto q = static_cast<std::uint64_t>(x.q());
    for (const Word& z : deletion_ball(x, t)) {
        std::vector<Symbol> buf = z.symbols();
        hamming_neighbours(buf, 0, t, x.q(), [&](const std::vector<Symbol>& w) {
            std::uint64_t v = 0;
            for (Symbol s : w) v = v * q + s;
            out.push_back(v);
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> iterated_absorption_ball(const Word& x, std::size_t t) {
    require_ball_radius(x, t);
    std::vector<Word> frontier{x};
    for (std::size_t step = 0; step < t; ++step) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (std::size_t i = 1; i <= w.size(); ++i) next.push_back(absorb_at(w, i));
        }
        frontier = sorted_unique(std::move(next));
    }
    return frontier;
}

bool in_ball(const Word& y, const Word& x, std::size_t t, MergeRule rule) {
    require_same_alphabet(x, y);
    const std::size_t n = x.size();
    if (t >= n || y.size() + t != n) return false;
    const std::size_t m = y.size();
    const int q = x.q();
    // reach[i][j]: x_1..x_i splits into j consecutive groups merging to y_1..y_j.
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(m + 1, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!reach[i][j]) continue;
            Symbol acc = x[i];
            for (std::size_t len = 1; len <= t + 1 && i + len <= n; ++len) {
                if (len > 1) acc = merge(rule, acc, x[i + len - 1], q);
                if (acc == y[j]) reach[i + len][j + 1] = 1;
            }
        }
    }
    for (std::size_t tp = 0; tp <= t; ++tp) {
        if (reach[n - tp][m]) return true;
    }
    return false;
}

bool in_absorption_ball(const Word& y, const Word& x, std::size_t t) { return in_ball(y, x, t, MergeRule::Saturating); }

std::vector<Word> splittings(const Word& z) {
    if (z.empty()) throw DomainError("splittings requires a non-empty word");
    const int q = z.q();
    std::vector<Word> out;
    std::vector<Symbol> buf(z.symbols());
    buf.push_back(0);
    for (int s = 0; s < q; ++s) {
        buf.back() = static_cast<Symbol>(s);
        out.emplace_back(q, buf);
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                if (merge(MergeRule::Saturating, static_cast<Symbol>(a), static_cast<Symbol>(b), q) != z[i]) continue;
                std::vector<Symbol> w;
                w.reserve(z.size() + 1);
                w.insert(w.end(), z.symbols().begin(), z.symbols().begin() + static_cast<std::ptrdiff_t>(i));
                w.push_back(static_cast<Symbol>(a));
                w.push_back(static_cast<Symbol>(b));
                w.insert(w.end(), z.symbols().begin() + static_cast<std::ptrdiff_t>(i) + 1, z.symbols().end());
                out.emplace_back(q, std::move(w));
            }
        }
    }
    return sorted_unique(std::move(out));
}

std::vector<Word> split_closure(const Word& z, std::size_t rounds) {
    std::vector<Word> frontier{z};
    for (std::size_t r = 0; r < rounds; ++r) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            auto s = splittings(w);
            next.insert(next.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
        }
        frontier = sorted_unique(std::move(next));
    }
    return frontier;
}

} // namespace absorb
