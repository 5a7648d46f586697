// essbasis: essential monomial bases of irreducible highest-weight modules
// for arbitrary birational sequences and monomial orders, plus generators of
// the truncated graded monoid for a fixed embedding degree.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "essbasis/errors.hpp"
#include "essbasis/json_io.hpp"
#include "essbasis/monoid.hpp"

using namespace essbasis;

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw invalid_input(std::string("could not parse ") + what + ": '" + tok + "'");
        }
    }
    if (out.empty()) throw invalid_input(std::string("empty ") + what);
    return out;
}

// "--sequence 1,5,8" (indices) or "--sequence [[1,0],[0,1]]" (coefficients)
BirationalSequence parse_sequence(const RootSystem& rs, const std::string& text) {
    if (text.find('[') == std::string::npos)
        return seq_from_indices(rs, parse_int_list(text, "sequence index"));
    std::vector<IVec> vectors;
    IVec cur;
    std::string num;
    int depth = 0;
    auto flush_num = [&]() {
        if (num.empty()) return;
        cur.push_back(std::stoi(num));
        num.clear();
    };
    for (char c : text) {
        if (c == '[') {
            ++depth;
            if (depth == 2) cur.clear();
        } else if (c == ']') {
            if (depth == 2) {
                flush_num();
                vectors.push_back(cur);
            }
            --depth;
        } else if (c == ',') {
            if (depth == 2) flush_num();
        } else if (c == '-' || (c >= '0' && c <= '9')) {
            num += c;
        } else if (c != ' ') {
            throw invalid_input(std::string("unexpected character '") + c + "' in --sequence");
        }
    }
    if (depth != 0) throw invalid_input("unbalanced brackets in --sequence");
    return seq_from_coeffs(rs, vectors);
}

struct CommonArgs {
    std::string weight;
    std::string order;
    std::string format = "text";
    long budget = 0;  // 0: use default / env
    bool early_exit = false;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_weight = true) {
    if (with_weight)
        cmd->add_option("--weight", args.weight, "highest weight, fw coordinates, e.g. 1,3,2")
            ->required();
    cmd->add_option("--order", args.order,
                    "monomial order: lex|invlex|neglex|deglex|degrevlex|wdegrevlex:w1,w2,...");
    cmd->add_option("--format", args.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", args.budget, "per-weight-space candidate cap (default 1000000)");
    cmd->add_flag("--early-exit", args.early_exit,
                  "stop the decomposition loop once the dimension is reached");
    cmd->add_option("--threads", args.threads, "worker threads (census only)");
}

EngineOptions engine_options(const CommonArgs& args) {
    EngineOptions opt;
    if (const char* env = std::getenv("ESSENTIAL_BUDGET")) opt.candidate_cap = std::atol(env);
    if (args.budget > 0) opt.candidate_cap = args.budget;
    opt.early_exit = args.early_exit;
    return opt;
}

WeylWord word_or_longest(const RootSystem& rs, const std::string& word_text) {
    if (word_text.empty()) return longest_word(rs);
    return parse_int_list(word_text, "word letter");
}

void emit_basis(const CommonArgs& args, const RootSystem& rs, const BirationalSequence& seq,
                const MonomialOrder& order, const EssentialSet& es) {
    if (args.format == "json")
        std::cout << basis_to_json(rs, seq, order, es).dump(2) << "\n";
    else
        print_basis_text(std::cout, rs, seq, order, es);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"essential monomial bases of highest-weight modules"};
    app.require_subcommand(1);

    std::string family;
    int rank = 0;
    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("family", family, "Lie type: A|B|C|D|E|F|G")->required();
        cmd->add_option("rank", rank, "rank")->required();
    };

    auto* cmd_operators = app.add_subcommand("operators", "list the positive roots with indices");
    add_type(cmd_operators);

    CommonArgs args;
    std::string seq_text, word_text;
    int degree = 0;
    bool long_run = false;

    auto* cmd_basis = app.add_subcommand("basis", "monomial basis for a custom sequence");
    add_type(cmd_basis);
    cmd_basis->add_option("--sequence", seq_text,
                          "positive roots: indices 1,5,8 or vectors [[1,0],[0,1]]")
        ->required();
    add_common(cmd_basis, args);

    auto* cmd_fflv =
        app.add_subcommand("basis-fflv", "roots by descending height, degrevlex");
    add_type(cmd_fflv);
    add_common(cmd_fflv, args);

    auto* cmd_string =
        app.add_subcommand("basis-string", "simple roots along a reduced word, neglex");
    add_type(cmd_string);
    cmd_string->add_option("--word", word_text, "reduced word, e.g. 1,2,1 (default: canonical)");
    add_common(cmd_string, args);

    auto* cmd_nz =
        app.add_subcommand("basis-nz", "simple roots along a reduced word, degrevlex");
    add_type(cmd_nz);
    cmd_nz->add_option("--word", word_text, "reduced word (default: canonical)");
    add_common(cmd_nz, args);

    auto* cmd_lusztig = app.add_subcommand(
        "basis-lusztig", "roots along a reduced word, wdegrevlex with height weights");
    add_type(cmd_lusztig);
    cmd_lusztig->add_option("--word", word_text, "reduced word (default: canonical)");
    add_common(cmd_lusztig, args);

    auto* cmd_kodaira =
        app.add_subcommand("kodaira", "generators of the truncated monoid up to a degree");
    add_type(cmd_kodaira);
    cmd_kodaira->add_option("--degree", degree, "truncation degree (>= 1)")->required();
    cmd_kodaira->add_option("--sequence", seq_text, "positive roots: indices or vectors");
    std::string preset;
    cmd_kodaira->add_option("--preset", preset, "fflv|string|nz|lusztig instead of --sequence")
        ->check(CLI::IsMember({"fflv", "string", "nz", "lusztig"}));
    cmd_kodaira->add_option("--word", word_text, "reduced word for string/nz/lusztig presets");
    add_common(cmd_kodaira, args);

    auto* cmd_census = app.add_subcommand(
        "census", "generator census over commutation classes of reduced words (string preset)");
    add_type(cmd_census);
    cmd_census->add_flag("--long-run", long_run, "lift the rank budget for word enumeration");
    add_common(cmd_census, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (family.size() != 1) throw invalid_input("family must be a single letter A..G");
        auto rs = std::make_shared<const RootSystem>(RootSystem::build(family[0], rank));

        if (cmd_operators->parsed()) {
            for (const std::string& line : operators_listing(*rs)) std::cout << line << "\n";
            return 0;
        }

        Weight lambda = parse_int_list(args.weight, "weight coordinate");
        if (static_cast<int>(lambda.size()) != rs->rank())
            throw invalid_input("weight length does not match the rank");
        auto cb = ChevalleyBasis::build(rs);

        BirationalSequence seq;
        MonomialOrder order;
        bool have_seq = false;
        if (cmd_basis->parsed()) {
            seq = parse_sequence(*rs, seq_text);
            order = order_of(OrderKind::degrevlex);
            have_seq = true;
        } else if (cmd_fflv->parsed()) {
            std::tie(seq, order) = seq_fflv(*rs);
            have_seq = true;
        } else if (cmd_string->parsed()) {
            std::tie(seq, order) = seq_string(*rs, word_or_longest(*rs, word_text));
            have_seq = true;
        } else if (cmd_nz->parsed()) {
            std::tie(seq, order) = seq_nz(*rs, word_or_longest(*rs, word_text));
            have_seq = true;
        } else if (cmd_lusztig->parsed()) {
            std::tie(seq, order) = seq_lusztig(*rs, word_or_longest(*rs, word_text));
            have_seq = true;
        } else if (cmd_kodaira->parsed()) {
            if (!seq_text.empty() && !preset.empty())
                throw invalid_input("give either --sequence or --preset, not both");
            if (!seq_text.empty()) {
                seq = parse_sequence(*rs, seq_text);
                order = order_of(OrderKind::degrevlex);
            } else if (preset == "fflv") {
                std::tie(seq, order) = seq_fflv(*rs);
            } else if (preset == "string") {
                std::tie(seq, order) = seq_string(*rs, word_or_longest(*rs, word_text));
            } else if (preset == "nz") {
                std::tie(seq, order) = seq_nz(*rs, word_or_longest(*rs, word_text));
            } else if (preset == "lusztig") {
                std::tie(seq, order) = seq_lusztig(*rs, word_or_longest(*rs, word_text));
            } else {
                throw invalid_input("kodaira needs --sequence or --preset");
            }
            have_seq = true;
        }
        if (!args.order.empty()) {
            if (!have_seq && !cmd_census->parsed())
                throw invalid_input("--order requires a basis computation");
            order = MonomialOrder::parse(args.order);
        }

        if (cmd_census->parsed()) {
            CensusOptions copt;
            copt.engine = engine_options(args);
            copt.threads = args.threads;
            if (long_run) copt.words.max_rank = rs->rank();
            CensusResult res = generator_census(cb, lambda, copt);
            if (args.format == "json")
                std::cout << census_to_json(*rs, res).dump(2) << "\n";
            else
                print_census_text(std::cout, *rs, res);
            return 0;
        }

        EssentialEngine engine(cb, seq, order, engine_options(args));
        if (cmd_kodaira->parsed()) {
            KodairaResult res = kodaira(engine, lambda, degree);
            if (args.format == "json")
                std::cout << kodaira_to_json(*rs, seq, order, res).dump(2) << "\n";
            else
                print_kodaira_text(std::cout, *rs, res);
            return res.budget_hit ? 2 : 0;
        }
        const EssentialSet& es = engine.compute_basis(lambda);
        emit_basis(args, *rs, seq, order, es);
        return 0;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_birational& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
