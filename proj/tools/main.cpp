#include "wordalg/axioms.hpp"
#include "wordalg/cut_coalgebra.hpp"
#include "wordalg/enumerate.hpp"
#include "wordalg/indicators.hpp"
#include "wordalg/inscription_coalgebra.hpp"
#include "wordalg/stable.hpp"
#include "wordalg/text.hpp"
#include "wordalg/trees.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace wordalg;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitUsage = 2;

std::vector<Letter> letters_in(const Phrase& p) {
    std::vector<Letter> out;
    for (const Word& w : p.words())
        for (const Letter& l : w.letters())
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    return out;
}

Pairing load_pairing(const std::string& desc, const std::vector<Letter>& fallback_alphabet) {
    if (desc == "delta") {
        if (fallback_alphabet.empty())
            throw parse_error("the delta pairing needs letters; pass --letters", 0);
        return Pairing::delta(fallback_alphabet);
    }
    std::ifstream in(desc);
    if (!in) throw parse_error("cannot open pairing file '" + desc + "'", 0);
    json spec = json::parse(in);
    bool rational = false;
    for (const auto& row : spec)
        if (row.at("coeff").get<std::string>().find('/') != std::string::npos) rational = true;
    Ring ring = rational ? Ring::rationals() : Ring::integers();
    Pairing mu(ring);
    for (const auto& row : spec) {
        Word a = parse_word(row.at("a").get<std::string>());
        Word b = parse_word(row.at("b").get<std::string>());
        if (a.length() != 1 || b.length() != 1)
            throw parse_error("pairing entries must be single letters", 0);
        mu.set(a.at(1), b.at(1),
               mu.value(a.at(1), b.at(1)) +
                   Coefficient::parse(row.at("coeff").get<std::string>(), ring));
    }
    return mu;
}

WordIndicator load_indicator(const std::string& desc, const Ring& ring) {
    if (desc == "len") return length_indicator(ring);
    if (desc.rfind("delta:", 0) == 0)
        return WordIndicator::delta(parse_word(desc.substr(6)), ring);
    if (desc.rfind("table:", 0) == 0) {
        std::ifstream in(desc.substr(6));
        if (!in) throw parse_error("cannot open indicator file '" + desc.substr(6) + "'", 0);
        ModuleElement<Word> table;
        for (const auto& row : json::parse(in))
            table.add_term(parse_word(row.at("basis").get<std::string>()),
                           Coefficient::parse(row.at("coeff").get<std::string>(), ring));
        return WordIndicator::table(std::move(table), ring);
    }
    if (desc.size() > 1 && desc[0] == 'f')
        return letter_count_indicator(Letter(desc.substr(1)), ring);
    throw parse_error("unknown indicator '" + desc + "' (use fA, len, delta:<word>, table:<file>)",
                      0);
}

template <typename L, typename R>
json tensor_json(const ModuleElement<Tensor2<L, R>>& e) {
    json out = json::array();
    for (const auto& [t, c] : e.terms())
        out.push_back({{"left", render(t.first)}, {"right", render(t.second)}, {"coeff", c.str()}});
    return out;
}

template <typename B>
json element_json(const ModuleElement<B>& e) {
    json out = json::array();
    for (const auto& [b, c] : e.terms()) out.push_back({{"basis", render(b)}, {"coeff", c.str()}});
    return out;
}

json report_json(const LawReport& r) {
    return {{"law", r.law},
            {"samples", r.samples},
            {"samples_checked", r.samples_checked},
            {"pass", r.pass},
            {"counterexample", r.counterexample}};
}

struct CheckOptions {
    std::string law;
    std::string coprod = "L";
    std::string stable = "all";
    std::string strong = "all";
    std::string pairing = "delta";
    std::string alphabet = "AB";
    std::size_t max_len = 5;
    std::size_t max_words = 3;
    std::size_t pq_len = 3;
    std::size_t random_extra = 0;
    std::uint64_t seed = 20240801;
    bool json_out = false;
};

int run_check(const CheckOptions& opt) {
    std::vector<Letter> alphabet = parse_alphabet(opt.alphabet);

    if (opt.law == "stability") {
        auto set = parse_stable_descriptor(opt.stable);
        auto r = verify_stability(set, alphabet, opt.max_len);
        if (opt.json_out) {
            json j{{"law", "stability"},
                   {"descriptor", set.descriptor()},
                   {"words_checked", r.words_checked},
                   {"pass", r.pass}};
            if (r.counterexample)
                j["counterexample"] = {{"word", render(r.counterexample->w)},
                                       {"i", r.counterexample->i},
                                       {"j", r.counterexample->j}};
            std::cout << j.dump() << "\n";
        } else if (r.pass) {
            std::cout << "stability: pass (" << r.words_checked << " words)\n";
        } else {
            std::cout << "stability: FAIL at word " << render(r.counterexample->w) << ", factor ("
                      << r.counterexample->i << "," << r.counterexample->j << ")\n";
        }
        return r.pass ? kExitOk : kExitLawFailure;
    }
    if (opt.law == "strong-stability") {
        auto set = parse_strong_descriptor(opt.strong);
        auto r = verify_strong_stability(set, alphabet, opt.max_len);
        if (opt.json_out) {
            json j{{"law", "strong-stability"},
                   {"descriptor", set.descriptor()},
                   {"words_checked", r.words_checked},
                   {"pass", r.pass}};
            if (r.counterexample)
                j["counterexample"] = {
                    {"word", render(r.counterexample->w)},
                    {"subword_positions", r.counterexample->subword_positions}};
            std::cout << j.dump() << "\n";
        } else if (r.pass) {
            std::cout << "strong-stability: pass (" << r.words_checked << " words)\n";
        } else {
            std::cout << "strong-stability: FAIL at word " << render(r.counterexample->w)
                      << "\n";
        }
        return r.pass ? kExitOk : kExitLawFailure;
    }

    const bool is_mu = opt.coprod == "mu";
    const bool is_s = opt.coprod == "S";
    StableSet set = parse_stable_descriptor(opt.stable);
    StronglyStableSet strong = parse_strong_descriptor(opt.strong);
    Pairing mu = (opt.pairing == "delta") ? Pairing::delta(alphabet)
                                          : load_pairing(opt.pairing, alphabet);

    Coproduct<Word> word_coprod;
    if (is_mu)
        word_coprod = [mu](const Word& w) {
            return simple_inscription_coproduct(ModuleElement<Word>::basis(w), mu);
        };
    else if (is_s)
        word_coprod = [strong](const Word& w) {
            return subword_coproduct(ModuleElement<Word>::basis(w), strong);
        };
    else
        word_coprod = [set](const Word& w) {
            return simple_cut_coproduct(ModuleElement<Word>::basis(w), set);
        };

    Coproduct<Phrase> phrase_coprod;
    if (is_mu)
        phrase_coprod = [mu](const Phrase& p) {
            return inscription_coproduct(ModuleElement<Phrase>::basis(p), mu);
        };
    else
        phrase_coprod = [set](const Phrase& p) {
            return cut_coproduct(ModuleElement<Phrase>::basis(p), set);
        };

    std::mt19937_64 rng(opt.seed);
    std::string sample_note =
        "alphabet " + opt.alphabet + ", max-len " + std::to_string(opt.max_len) +
        (opt.random_extra
             ? ", +" + std::to_string(opt.random_extra) + " random (seed " +
                   std::to_string(opt.seed) + ")"
             : "");

    auto word_samples = [&](std::size_t min_len) {
        std::vector<Word> ws = all_words(alphabet, min_len, opt.max_len);
        for (std::size_t k = 0; k < opt.random_extra; ++k) {
            Word w = random_word(rng, alphabet, opt.max_len + 2);
            if (w.length() >= min_len) ws.push_back(w);
        }
        return ws;
    };
    auto phrase_samples = [&]() {
        std::vector<Phrase> ps = is_mu ? all_phrases(alphabet, opt.max_len, opt.max_words)
                                       : all_strict_phrases(alphabet, opt.max_len);
        ps.push_back(Phrase());
        return ps;
    };

    auto eps = [](const Phrase& p) {
        return p.empty() ? Coefficient(Ring::integers(), 1) : Coefficient(Ring::integers(), 0);
    };
    auto mult = [](const Phrase& a, const Phrase& b) { return concat(a, b); };

    LawReport report;
    if (opt.law == "pre-lie") {
        report = check_pre_lie<Word>(word_coprod, word_samples(is_mu || is_s ? 0 : 1),
                                     sample_note);
    } else if (opt.law == "cojacobi") {
        report = check_cojacobi<Word>(word_coprod, word_samples(is_mu || is_s ? 0 : 1),
                                      sample_note);
    } else if (opt.law == "coassoc") {
        if (is_s)
            report = check_coassoc<Word>(word_coprod, word_samples(0), sample_note);
        else
            report = check_coassoc<Phrase>(phrase_coprod, phrase_samples(), sample_note);
    } else if (opt.law == "counit") {
        report = check_counit<Phrase>(phrase_coprod, eps, phrase_samples(), sample_note);
    } else if (opt.law == "bialgebra") {
        std::vector<std::pair<Phrase, Phrase>> pairs;
        auto ps = phrase_samples();
        for (const Phrase& a : ps)
            for (const Phrase& b : ps)
                if (a.letter_count() + b.letter_count() <= opt.max_len) pairs.emplace_back(a, b);
        report = check_bialgebra<Phrase>(phrase_coprod, mult, pairs, sample_note);
    } else if (opt.law == "antipode") {
        std::function<ModuleElement<Phrase>(const Phrase&)> anti;
        if (is_mu)
            anti = [mu](const Phrase& p) {
                return inscription_antipode(ModuleElement<Phrase>::basis(p), mu);
            };
        else
            anti = [set](const Phrase& p) {
                return cut_antipode(ModuleElement<Phrase>::basis(p), set);
            };
        report = check_antipode<Phrase>(phrase_coprod, anti, eps, Phrase(), mult,
                                        phrase_samples(), sample_note);
    } else if (opt.law == "comodule") {
        std::function<ModuleElement<Tensor2<Phrase, Word>>(const Word&)> theta;
        if (is_mu)
            theta = [mu](const Word& w) { return inscription_coaction(w, mu); };
        else
            theta = [set](const Word& w) { return cut_coaction(w, set); };
        report = check_comodule<Phrase, Word>(theta, phrase_coprod, Phrase(),
                                              word_samples(is_mu ? 0 : 1), sample_note);
    } else if (opt.law == "leading-term") {
        report = check_leading_term(phrase_coprod, word_coprod, word_samples(is_mu ? 0 : 1),
                                    sample_note);
    } else if (opt.law == "left-handed") {
        report = check_left_handed(phrase_coprod, word_samples(1), sample_note);
    } else if (opt.law == "duality") {
        std::function<ModuleElement<Phrase>(const Phrase&, const Phrase&)> prod;
        if (is_mu)
            prod = [mu](const Phrase& p, const Phrase& q) {
                return dual_inscription_product(p, q, mu);
            };
        else
            prod = [set](const Phrase& p, const Phrase& q) {
                return dual_cut_product(p, q, set);
            };
        std::vector<Phrase> rs = phrase_samples();
        std::vector<Phrase> ps = is_mu ? all_phrases(alphabet, opt.pq_len, 2)
                                       : all_strict_phrases(alphabet, opt.pq_len);
        ps.push_back(Phrase());
        report = check_duality(phrase_coprod, prod, rs, ps,
                               sample_note + ", pq-len " + std::to_string(opt.pq_len));
    } else if (opt.law == "hopf-closure") {
        if (is_mu) throw parse_error("hopf-closure applies to --coprod L", 0);
        auto in_set = [set](const Phrase& p) {
            for (const Word& w : p.words())
                if (!set.contains(w)) return false;
            return true;
        };
        std::vector<Phrase> samples;
        for (const Phrase& p : phrase_samples())
            if (in_set(p)) samples.push_back(p);
        report = detail::scan<Phrase>(
            "hopf-closure", sample_note, samples,
            [&](const Phrase& p) -> std::optional<std::string> {
                for (const auto& [t, c] : phrase_coprod(p).terms())
                    if (!in_set(t.first) || !in_set(t.second))
                        return "input " + render(p) + "\n  escaping term " + render(t);
                return std::nullopt;
            });
    } else {
        throw parse_error("unknown law '" + opt.law + "'", 0);
    }

    if (opt.json_out)
        std::cout << report_json(report).dump() << "\n";
    else if (report.pass)
        std::cout << report.law << ": pass (" << report.samples_checked << " samples; "
                  << report.samples << ")\n";
    else
        std::cout << report.law << ": FAIL\n" << report.counterexample << "\n";
    return report.pass ? kExitOk : kExitLawFailure;
}

int run_ck_check(std::size_t max_edges, const std::string& letters, bool json_out) {
    std::vector<Letter> pool = parse_alphabet(letters);
    if (pool.size() < max_edges)
        throw parse_error("need at least --max-edges distinct letters in --letters", 0);
    Pairing mu = Pairing::delta(pool);
    std::size_t checked = 0;
    for (const Forest& f : enumerate_forests(max_edges, pool)) {
        Phrase p = forest_to_phrase(f);
        ModuleElement<Tensor2<Phrase, Phrase>> enc;
        for (const auto& [t, c] : ck_coproduct(f).terms())
            enc.add_term({forest_to_phrase(t.first), forest_to_phrase(t.second)}, c);
        auto ins = inscription_coproduct(ModuleElement<Phrase>::basis(p), mu);
        ++checked;
        if (!(enc == ins)) {
            if (json_out)
                std::cout << json{{"pass", false},
                                  {"forest", forest_to_text(f)},
                                  {"ck", tensor_json(enc)},
                                  {"inscription", tensor_json(ins)}}
                                 .dump()
                          << "\n";
            else
                std::cout << "ck-check: FAIL at forest " << forest_to_text(f)
                          << "\n  admissible cuts: " << render(enc)
                          << "\n  inscriptions:    " << render(ins) << "\n";
            return kExitLawFailure;
        }
    }
    if (json_out)
        std::cout << json{{"pass", true}, {"max_edges", max_edges}, {"forests_checked", checked}}
                         .dump()
                  << "\n";
    else
        std::cout << "ck-check: pass (" << checked << " forests, up to " << max_edges
                  << " edges)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wordalg: coproducts, antipodes and indicator actions on words and phrases"};
    app.require_subcommand(1);

    std::string input, input2, stable = "all", strong = "all", pairing = "delta",
                       indicator = "len", letters, tree_text;
    std::size_t cut_cap = kDefaultCutCap, inscription_cap = kDefaultInscriptionCap,
                max_edges = 4;
    bool json_out = false;

    auto add_json = [&json_out](CLI::App* cmd) {
        cmd->add_flag("--json", json_out, "emit JSON instead of text");
    };

    auto* coprod_l = app.add_subcommand("coprod-L", "cut coproduct of a phrase");
    coprod_l->add_option("--stable", stable, "stable-set descriptor")->capture_default_str();
    coprod_l->add_option("--cut-cap", cut_cap, "word length cap")->capture_default_str();
    coprod_l->add_option("phrase", input)->required();
    add_json(coprod_l);

    auto* antipode_l = app.add_subcommand("antipode-L", "antipode of the cut bialgebra");
    antipode_l->add_option("--stable", stable)->capture_default_str();
    antipode_l->add_option("--cut-cap", cut_cap)->capture_default_str();
    antipode_l->add_option("phrase", input)->required();
    add_json(antipode_l);

    auto* shuffle_s = app.add_subcommand("shuffle-S", "subword coproduct of a word");
    shuffle_s->add_option("--strong", strong, "strongly stable set descriptor")
        ->capture_default_str();
    shuffle_s->add_option("word", input)->required();
    add_json(shuffle_s);

    auto* coprod_mu = app.add_subcommand("coprod-mu", "inscription coproduct of a phrase");
    coprod_mu->add_option("--pairing", pairing, "delta or a JSON file")->capture_default_str();
    coprod_mu->add_option("--letters", letters, "alphabet for the delta pairing");
    coprod_mu->add_option("--inscription-cap", inscription_cap)->capture_default_str();
    coprod_mu->add_option("phrase", input)->required();
    add_json(coprod_mu);

    auto* antipode_mu =
        app.add_subcommand("antipode-mu", "antipode of the inscription bialgebra");
    antipode_mu->add_option("--pairing", pairing)->capture_default_str();
    antipode_mu->add_option("--letters", letters);
    antipode_mu->add_option("--inscription-cap", inscription_cap)->capture_default_str();
    antipode_mu->add_option("phrase", input)->required();
    add_json(antipode_mu);

    auto* act = app.add_subcommand("act", "left action of a word indicator on a word");
    act->add_option("--indicator", indicator, "fA | len | delta:<word> | table:<file>")
        ->capture_default_str();
    auto* act_pairing = act->add_option("--pairing", pairing, "pairing action");
    auto* act_stable = act->add_option("--stable", stable, "cut action");
    act->add_option("--letters", letters);
    act->add_option("word", input)->required();
    add_json(act);
    act_pairing->excludes(act_stable);

    auto* exp_act = app.add_subcommand("exp-act", "exponential of the cut action (rational)");
    exp_act->add_option("--indicator", indicator)->capture_default_str();
    exp_act->add_option("--stable", stable)->capture_default_str();
    exp_act->add_option("word", input)->required();
    add_json(exp_act);

    auto* dual_l = app.add_subcommand("dual-L", "dual product of two phrases (cut side)");
    dual_l->add_option("--stable", stable)->capture_default_str();
    dual_l->add_option("p", input)->required();
    dual_l->add_option("q", input2)->required();
    add_json(dual_l);

    auto* dual_mu = app.add_subcommand("dual-mu", "dual product of two phrases (pairing side)");
    dual_mu->add_option("--pairing", pairing)->capture_default_str();
    dual_mu->add_option("--letters", letters);
    dual_mu->add_option("p", input)->required();
    dual_mu->add_option("q", input2)->required();
    add_json(dual_mu);

    auto* deconcat_cmd = app.add_subcommand("deconcat", "deconcatenation of a phrase");
    deconcat_cmd->add_option("phrase", input)->required();
    add_json(deconcat_cmd);

    auto* tree2word = app.add_subcommand("tree2word", "boundary word of a decorated tree");
    tree2word->add_option("tree", tree_text)->required();

    auto* word2tree = app.add_subcommand("word2tree", "tree of an unlaced word");
    word2tree->add_option("word", input)->required();

    auto* ck =
        app.add_subcommand("ck-check", "compare admissible-cut and inscription coproducts");
    ck->add_option("--max-edges", max_edges)->capture_default_str();
    ck->add_option("--letters", letters, "decoration pool (default ABCDE)");
    add_json(ck);

    CheckOptions chk;
    auto* check = app.add_subcommand("check", "run a law checker over enumerated samples");
    check->add_option("--law", chk.law,
                      "pre-lie|coassoc|bialgebra|counit|antipode|comodule|cojacobi|"
                      "leading-term|left-handed|duality|hopf-closure|stability|strong-stability")
        ->required();
    check->add_option("--coprod", chk.coprod, "L | mu | S")->capture_default_str();
    check->add_option("--stable", chk.stable)->capture_default_str();
    check->add_option("--strong", chk.strong)->capture_default_str();
    check->add_option("--pairing", chk.pairing)->capture_default_str();
    check->add_option("--alphabet", chk.alphabet)->capture_default_str();
    check->add_option("--max-len", chk.max_len)->capture_default_str();
    check->add_option("--max-words", chk.max_words)->capture_default_str();
    check->add_option("--pq-len", chk.pq_len)->capture_default_str();
    check->add_option("--random", chk.random_extra, "extra random samples")
        ->capture_default_str();
    check->add_option("--seed", chk.seed)->capture_default_str();
    check->add_flag("--json", chk.json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        auto emit_pp = [&](const ModuleElement<Tensor2<Phrase, Phrase>>& e) {
            if (json_out)
                std::cout << tensor_json(e).dump() << "\n";
            else
                std::cout << render(e) << "\n";
        };
        auto emit_ww = [&](const ModuleElement<Tensor2<Word, Word>>& e) {
            if (json_out)
                std::cout << tensor_json(e).dump() << "\n";
            else
                std::cout << render(e) << "\n";
        };
        auto emit_words = [&](const ModuleElement<Word>& e) {
            if (json_out)
                std::cout << element_json(e).dump() << "\n";
            else
                std::cout << render(e) << "\n";
        };
        auto emit_phrases = [&](const ModuleElement<Phrase>& e) {
            if (json_out)
                std::cout << element_json(e).dump() << "\n";
            else
                std::cout << render(e) << "\n";
        };
        auto alphabet_or = [&](const Phrase& p) {
            return letters.empty() ? letters_in(p) : parse_alphabet(letters);
        };

        if (coprod_l->parsed()) {
            auto p = ModuleElement<Phrase>::basis(parse_phrase(input));
            emit_pp(cut_coproduct(p, parse_stable_descriptor(stable), cut_cap));
        } else if (antipode_l->parsed()) {
            auto p = ModuleElement<Phrase>::basis(parse_phrase(input));
            emit_phrases(cut_antipode(p, parse_stable_descriptor(stable), cut_cap));
        } else if (shuffle_s->parsed()) {
            auto v = ModuleElement<Word>::basis(parse_word(input));
            emit_ww(subword_coproduct(v, parse_strong_descriptor(strong)));
        } else if (coprod_mu->parsed()) {
            Phrase p = parse_phrase(input);
            emit_pp(inscription_coproduct(ModuleElement<Phrase>::basis(p),
                                          load_pairing(pairing, alphabet_or(p)),
                                          inscription_cap));
        } else if (antipode_mu->parsed()) {
            Phrase p = parse_phrase(input);
            emit_phrases(inscription_antipode(ModuleElement<Phrase>::basis(p),
                                              load_pairing(pairing, alphabet_or(p)),
                                              inscription_cap));
        } else if (act->parsed()) {
            Word w = parse_word(input);
            auto v = ModuleElement<Word>::basis(w);
            auto f = load_indicator(indicator, Ring::integers());
            if (act_stable->count() && !act_pairing->count())
                emit_words(cut_action(f, v, parse_stable_descriptor(stable)));
            else
                emit_words(inscription_action(
                    f, v, load_pairing(pairing, alphabet_or(Phrase::single(w)))));
        } else if (exp_act->parsed()) {
            Ring q = Ring::rationals();
            auto v = ModuleElement<Word>::basis(parse_word(input), Coefficient::one(q));
            emit_words(exp_cut_action(load_indicator(indicator, q), v,
                                      parse_stable_descriptor(stable)));
        } else if (dual_l->parsed()) {
            emit_phrases(dual_cut_product(parse_phrase(input), parse_phrase(input2),
                                          parse_stable_descriptor(stable)));
        } else if (dual_mu->parsed()) {
            Phrase p = parse_phrase(input), q = parse_phrase(input2);
            auto fallback = letters_in(concat(p, q));
            emit_phrases(dual_inscription_product(
                p, q,
                load_pairing(pairing, letters.empty() ? fallback : parse_alphabet(letters))));
        } else if (deconcat_cmd->parsed()) {
            emit_pp(deconcatenate(parse_phrase(input)));
        } else if (tree2word->parsed()) {
            std::cout << render(tree_to_word(parse_tree(tree_text))) << "\n";
        } else if (word2tree->parsed()) {
            std::cout << tree_to_text(word_to_tree(parse_word(input))) << "\n";
        } else if (ck->parsed()) {
            return run_ck_check(max_edges, letters.empty() ? "ABCDE" : letters, json_out);
        } else if (check->parsed()) {
            return run_check(chk);
        }
        return kExitOk;
    } catch (const parse_error& e) {
        std::cerr << "error at position " << e.position() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
