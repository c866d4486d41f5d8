#include "wordalg/stable.hpp"

#include "wordalg/enumerate.hpp"
#include "wordalg/text.hpp"

#include <algorithm>

namespace wordalg {

StableSet StableSet::all_nonempty() {
    return StableSet("all", [](const Word&) { return true; });
}

StableSet StableSet::letter_count_zero(const Letter& a) {
    return StableSet("zero:" + a.symbol(),
                     [a](const Word& w) { return letter_count(w, a) == 0; });
}

StableSet StableSet::letter_count_divisible(const Letter& a, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("divisor must be >= 1");
    return StableSet("divisible:" + a.symbol() + ":" + std::to_string(n),
                     [a, n](const Word& w) { return letter_count(w, a) % n == 0; });
}

StableSet StableSet::group_weight_zero(const std::map<Letter, std::vector<long long>>& weights) {
    std::size_t dim = 0;
    for (const auto& [l, g] : weights) {
        if (dim == 0) dim = g.size();
        if (g.size() != dim || dim == 0)
            throw std::invalid_argument("weight vectors must share one nonzero dimension");
    }
    std::string desc = "weight:";
    bool first = true;
    for (const auto& [l, g] : weights) {
        if (!first) desc += ";";
        desc += l.symbol() + "=";
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k) desc += ",";
            desc += std::to_string(g[k]);
        }
        first = false;
    }
    return StableSet(desc, [weights, dim](const Word& w) {
        std::vector<long long> sum(dim, 0);
        for (const Letter& l : w.letters()) {
            auto it = weights.find(l);
            if (it == weights.end()) continue;
            for (std::size_t k = 0; k < dim; ++k) sum[k] += it->second[k];
        }
        return std::all_of(sum.begin(), sum.end(), [](long long v) { return v == 0; });
    });
}

StableSet StableSet::intersection(std::vector<StableSet> members) {
    if (members.empty()) return all_nonempty();
    std::string desc = "intersect:";
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (k) desc += "+";
        desc += members[k].descriptor();
    }
    return StableSet(desc, [members](const Word& w) {
        return std::all_of(members.begin(), members.end(),
                           [&w](const StableSet& s) { return s.contains(w); });
    });
}

StableSet StableSet::custom(std::string name, Predicate pred) {
    return StableSet("custom:" + std::move(name), std::move(pred));
}

StronglyStableSet StronglyStableSet::all_words() {
    return StronglyStableSet("all", [](const Word&) { return true; });
}

StronglyStableSet StronglyStableSet::from_stable(const StableSet& base) {
    return StronglyStableSet(base.descriptor(),
                             [base](const Word& w) { return base.contains(w); });
}

StronglyStableSet StronglyStableSet::custom(std::string name, Predicate pred) {
    return StronglyStableSet("custom:" + std::move(name), std::move(pred));
}

StabilityReport verify_stability(const StableSet& set, const std::vector<Letter>& alphabet,
                                 std::size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    std::vector<Word> words = all_words(alphabet, 1, max_len);
    auto check = [&](std::size_t k) -> std::optional<StabilityCounterexample> {
        const Word& w = words[k];
        std::size_t m = w.length();
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = i + 1; j <= m + 1; ++j) {
                if (i == 1 && j == m + 1) continue;
                if (!set.contains(factor(w, i, j))) continue;
                Word rest = concat(factor(w, 1, i), factor(w, j, m + 1));
                if (set.contains(w) != set.contains(rest))
                    return StabilityCounterexample{w, i, j};
            }
        }
        return std::nullopt;
    };
    StabilityReport report;
    report.words_checked = words.size();
    if (auto f = first_failure<StabilityCounterexample>(words.size(), check)) {
        report.pass = false;
        report.counterexample = std::move(f);
    }
    return report;
}

namespace {

// Enumerates index subsets of {1..m} as position vectors.
void for_each_subset(std::size_t m, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> positions;
    std::function<bool(std::size_t)> rec = [&](std::size_t next) -> bool {
        if (!f(positions)) return false;
        for (std::size_t p = next; p <= m; ++p) {
            positions.push_back(p);
            bool go = rec(p + 1);
            positions.pop_back();
            if (!go) return false;
        }
        return true;
    };
    rec(1);
}

}  // namespace

StrongStabilityReport verify_strong_stability(const StronglyStableSet& set,
                                              const std::vector<Letter>& alphabet,
                                              std::size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    std::vector<Word> words = all_words(alphabet, 0, max_len);
    auto check = [&](std::size_t k) -> std::optional<StrongStabilityCounterexample> {
        const Word& w = words[k];
        bool w_in = set.contains(w);
        std::optional<StrongStabilityCounterexample> bad;
        for_each_subset(w.length(), [&](const std::vector<std::size_t>& positions) {
            Word sub = select_positions(w, positions);
            if (!set.contains(sub)) return true;
            Word rest = delete_positions(w, positions);
            if (w_in != set.contains(rest)) {
                bad = StrongStabilityCounterexample{w, positions};
                return false;
            }
            return true;
        });
        return bad;
    };
    StrongStabilityReport report;
    report.words_checked = words.size();
    if (auto f = first_failure<StrongStabilityCounterexample>(words.size(), check)) {
        report.pass = false;
        report.counterexample = std::move(f);
    }
    return report;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return out;
}

}  // namespace

StableSet parse_stable_descriptor(const std::string& text) {
    if (text == "all") return StableSet::all_nonempty();
    if (text.rfind("zero:", 0) == 0) return StableSet::letter_count_zero(Letter(text.substr(5)));
    if (text.rfind("divisible:", 0) == 0) {
        auto parts = split(text.substr(10), ':');
        if (parts.size() != 2)
            throw parse_error("expected divisible:<letter>:<N>", 0);
        return StableSet::letter_count_divisible(Letter(parts[0]),
                                                 std::stoull(parts[1]));
    }
    if (text.rfind("weight:", 0) == 0) {
        std::map<Letter, std::vector<long long>> weights;
        for (const std::string& entry : split(text.substr(7), ';')) {
            auto eq = entry.find('=');
            if (eq == std::string::npos)
                throw parse_error("expected weight:<letter>=<g1>,<g2>;...", 0);
            std::vector<long long> g;
            for (const std::string& num : split(entry.substr(eq + 1), ','))
                g.push_back(std::stoll(num));
            weights.emplace(Letter(entry.substr(0, eq)), std::move(g));
        }
        return StableSet::group_weight_zero(weights);
    }
    if (text.rfind("intersect:", 0) == 0) {
        std::vector<StableSet> members;
        for (const std::string& part : split(text.substr(10), '+'))
            members.push_back(parse_stable_descriptor(part));
        return StableSet::intersection(std::move(members));
    }
    throw parse_error("unknown stable-set descriptor '" + text + "'", 0);
}

StronglyStableSet parse_strong_descriptor(const std::string& text) {
    if (text == "all") return StronglyStableSet::all_words();
    return StronglyStableSet::from_stable(parse_stable_descriptor(text));
}

}  // namespace wordalg
