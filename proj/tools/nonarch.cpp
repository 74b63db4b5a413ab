// Command line front end: expression evaluator, REPL, batch runner, and the
// finite filter laboratory.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nonarch/nonarch.hpp"

namespace {

using nonarch::lang::Evaluator;
using Json = nlohmann::ordered_json;

struct LineResult {
    std::string input;
    std::string kind;
    std::string value;
    std::string error;  // empty on success
    bool failed = false;
};

LineResult eval_line(const Evaluator& ev, const std::string& line) {
    LineResult r;
    r.input = line;
    try {
        nonarch::lang::Value v = ev.eval_text(line);
        r.kind = nonarch::lang::value_kind(v);
        r.value = nonarch::lang::value_str(v);
    } catch (const nonarch::lang::EvalError& e) {
        r.failed = true;
        r.error = e.name;
    } catch (const std::exception& e) {
        r.failed = true;
        r.error = e.what();
    }
    return r;
}

void emit_text(std::ostream& os, const LineResult& r) {
    if (r.failed)
        os << "error\t" << r.error << "\n";
    else
        os << r.kind << "\t" << r.value << "\n";
}

void emit_json(std::ostream& os, const LineResult& r) {
    Json rec;
    rec["input"] = r.input;
    if (r.failed) {
        rec["error"] = r.error;
    } else {
        rec["kind"] = r.kind;
        rec["value"] = r.value;
    }
    os << rec.dump() << "\n";
}

int run_batch(const std::string& path, bool json) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "nonarch: cannot open " << path << "\n";
        return 1;
    }
    Evaluator ev;
    bool any_error = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        LineResult r = eval_line(ev, line);
        any_error |= r.failed;
        if (json)
            emit_json(std::cout, r);
        else
            emit_text(std::cout, r);
    }
    if (in.bad()) {
        std::cerr << "nonarch: I/O error reading " << path << "\n";
        return 1;
    }
    return any_error ? 2 : 0;
}

int run_repl() {
    Evaluator ev;
    std::string line;
    std::cerr << "nonarch repl; enter expressions, Ctrl-D to quit\n";
    while (true) {
        std::cerr << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        emit_text(std::cout, eval_line(ev, line));
    }
    return 0;
}

std::vector<int> mask_indices(nonarch::filter_lab::Mask m) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (m >> i & 1) out.push_back(i);
    return out;
}

int run_filters(int k, bool json) {
    namespace fl = nonarch::filter_lab;
    std::vector<fl::FiniteFilter> filters;
    try {
        filters = fl::enumerate_filters(k);
    } catch (const nonarch::UniverseTooLarge& e) {
        std::cerr << "nonarch: " << e.what() << "\n";
        return 1;
    }

    // Sample vectors for the order and membership checks: indicators of every
    // subset plus small constants.
    std::vector<fl::PowerVector> sample;
    for (fl::Mask m = 0; m <= fl::full_mask(k); ++m) sample.push_back(fl::indicator(k, m));
    sample.push_back(fl::constant_vector(k, nonarch::ExactRational(-2)));
    sample.push_back(fl::constant_vector(k, nonarch::ExactRational(3)));

    int ultra = 0;
    bool all_roundtrip = true, all_chain = true, all_embed = true, all_order = true;
    Json jfilters = Json::array();
    for (const auto& f : filters) {
        bool is_u = fl::is_ultrafilter(f);
        ultra += is_u;
        fl::FiniteIdeal ideal = fl::filter_to_ideal(f);
        fl::QuotientInfo q = fl::quotient(f);
        bool roundtrip = fl::ideal_to_filter(ideal).family == f.family;
        all_roundtrip &= roundtrip;
        all_chain &= (is_u == q.is_field) && (is_u == ideal.is_maximal());
        all_embed &= fl::embedding_injectivity_check(f);
        fl::OrderReport rep = fl::quotient_order_check(f, sample);
        all_order &= rep.ok;
        bool order_matches = (q.order == fl::OrderKind::Total) == rep.incomparable_pairs.empty();
        all_order &= order_matches;

        Json jf;
        Json family = Json::array();
        for (fl::Mask m : f.family) family.push_back(mask_indices(m));
        jf["family"] = family;
        jf["is_ultrafilter"] = is_u;
        jf["ideal_co_support"] = mask_indices(ideal.co_support);
        jf["quotient"] = {{"dim", q.dim},
                          {"field", q.is_field},
                          {"order", q.order == fl::OrderKind::Total ? "total" : "partial"}};
        jfilters.push_back(std::move(jf));
    }

    if (json) {
        Json out;
        out["universe"] = k;
        out["filter_count"] = filters.size();
        out["ultrafilter_count"] = ultra;
        out["filters"] = std::move(jfilters);
        out["checks"] = {{"ideal_filter_roundtrip", all_roundtrip},
                         {"ultrafilter_field_maximal_chain", all_chain},
                         {"embedding_injective", all_embed},
                         {"order_axioms", all_order}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "universe size " << k << ": " << filters.size() << " filters, " << ultra
                  << " ultrafilters\n";
        std::cout << "ideal<->filter round-trip: " << (all_roundtrip ? "pass" : "FAIL") << "\n";
        std::cout << "ultrafilter<->field<->maximal ideal: " << (all_chain ? "pass" : "FAIL")
                  << "\n";
        std::cout << "embedding injectivity/homomorphism: " << (all_embed ? "pass" : "FAIL")
                  << "\n";
        std::cout << "quotient order axioms: " << (all_order ? "pass" : "FAIL") << "\n";
    }
    return (all_roundtrip && all_chain && all_embed && all_order) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact non-Archimedean field calculator"};
    app.require_subcommand(1);

    std::string expr_text;
    auto* cmd_eval = app.add_subcommand("eval", "evaluate one expression");
    cmd_eval->add_option("expr", expr_text, "expression")->required();

    auto* cmd_repl = app.add_subcommand("repl", "interactive evaluator");

    std::string batch_path;
    bool batch_json = false;
    auto* cmd_batch = app.add_subcommand("batch", "evaluate a file, one expression per line");
    cmd_batch->add_option("file", batch_path, "input file")->required();
    cmd_batch->add_flag("--json", batch_json, "emit one JSON record per line");

    int universe = 3;
    bool filters_json = false;
    auto* cmd_filters = app.add_subcommand("filters", "finite filter laboratory");
    cmd_filters->add_option("k", universe, "universe size (1..6)")->required();
    cmd_filters->add_flag("--json", filters_json, "emit a JSON report");

    std::string witness_text;
    auto* cmd_witness = app.add_subcommand("witness", "Archimedean-failure witness for a step");
    cmd_witness->add_option("expr", witness_text, "positive step expression")->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_eval->parsed()) {
        LineResult r = eval_line(Evaluator{}, expr_text);
        if (r.failed) {
            std::cerr << "error: " << r.error << "\n";
            return 2;
        }
        std::cout << r.value << "\n";
        return 0;
    }
    if (cmd_repl->parsed()) return run_repl();
    if (cmd_batch->parsed()) return run_batch(batch_path, batch_json);
    if (cmd_filters->parsed()) return run_filters(universe, filters_json);
    if (cmd_witness->parsed()) {
        try {
            nonarch::lang::Value v = Evaluator{}.eval_text(witness_text);
            auto* g = std::get_if<nonarch::Germ>(&v);
            if (!g) {
                std::cerr << "error: witness needs a field element\n";
                return 2;
            }
            std::cout << nonarch::archimedean_witness(*g).str() << "\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 1;
}
