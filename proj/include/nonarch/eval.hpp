#pragma once

#include <cstdlib>
#include <string>
#include <variant>

#include "nonarch/filter_lab.hpp"
#include "nonarch/magnitude.hpp"
#include "nonarch/parser.hpp"
#include "nonarch/worlds.hpp"

namespace nonarch {
namespace lang {

using Value = std::variant<Germ, ExactRational, Magnitude, bool, WalkableWorld, WWRelation,
                           ScalingCase, StepSituation>;

/// Module error rethrown with the source location of the offending
/// expression; `name` keeps the bare error identifier for machine output.
struct EvalError : std::runtime_error {
    std::string name;
    SourceLoc loc;
    EvalError(std::string n, SourceLoc l)
        : std::runtime_error(n + " at " + loc_str(l)), name(std::move(n)), loc(l) {}
};

struct TypeMismatch : EvalError {
    TypeMismatch(const std::string& detail, SourceLoc l)
        : EvalError("TypeMismatch: " + detail, l) {}
};

inline int max_degree_limit() {
    if (const char* env = std::getenv("NONARCH_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

inline const char* value_kind(const Value& v) {
    struct Visitor {
        const char* operator()(const Germ&) const { return "germ"; }
        const char* operator()(const ExactRational&) const { return "rational"; }
        const char* operator()(const Magnitude&) const { return "magnitude"; }
        const char* operator()(bool) const { return "bool"; }
        const char* operator()(const WalkableWorld&) const { return "world"; }
        const char* operator()(WWRelation) const { return "relation"; }
        const char* operator()(const ScalingCase&) const { return "case"; }
        const char* operator()(StepSituation) const { return "situation"; }
    };
    return std::visit(Visitor{}, v);
}

inline std::string value_str(const Value& v) {
    struct Visitor {
        std::string operator()(const Germ& g) const { return g.str(); }
        std::string operator()(const ExactRational& r) const { return r.str(); }
        std::string operator()(const Magnitude& m) const { return to_string(m); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const WalkableWorld& w) const { return w.str(); }
        std::string operator()(WWRelation r) const { return to_string(r); }
        std::string operator()(const ScalingCase& c) const {
            return std::to_string(c.case_id) + " gal=" + to_string(c.gal_relation) +
                   " len=" + to_string(c.length_kind) +
                   " monad=" + (c.subset_of_monad ? "true" : "false");
        }
        std::string operator()(StepSituation s) const {
            return std::to_string(static_cast<int>(s));
        }
    };
    return std::visit(Visitor{}, v);
}

class Evaluator {
public:
    Evaluator() : limit_(max_degree_limit()) {}
    explicit Evaluator(int degree_limit) : limit_(degree_limit) {}

    Value eval(const Expr& e) const {
        return std::visit([&](const auto& node) { return eval_node(node, e.loc); }, e.node);
    }

    Value eval_text(const std::string& text) const { return eval(*parse(text)); }

private:
    Value eval_node(const NumberNode& n, SourceLoc) const { return Germ(n.value); }
    Value eval_node(const OmegaNode&, SourceLoc) const { return Germ::omega(); }

    Value eval_node(const NegNode& n, SourceLoc loc) const {
        return checked(loc, -germ_arg(*n.operand));
    }

    Value eval_node(const BinaryNode& b, SourceLoc loc) const {
        Germ lhs = germ_arg(*b.lhs);
        Germ rhs = germ_arg(*b.rhs);
        return guard(loc, [&] {
            switch (b.op) {
                case '+': return checked(loc, lhs + rhs);
                case '-': return checked(loc, lhs - rhs);
                case '*': return checked(loc, lhs * rhs);
                default: return checked(loc, lhs / rhs);
            }
        });
    }

    Value eval_node(const PowNode& p, SourceLoc loc) const {
        Germ base = germ_arg(*p.base);
        return guard(loc, [&] { return checked(loc, base.pow(p.exponent)); });
    }

    Value eval_node(const CompareNode& c, SourceLoc loc) const {
        Germ lhs = germ_arg(*c.lhs);
        Germ rhs = germ_arg(*c.rhs);
        auto ord = lhs <=> rhs;
        if (c.op == "<") return ord < 0;
        if (c.op == "<=") return ord <= 0;
        if (c.op == "==") return ord == 0;
        if (c.op == ">=") return ord >= 0;
        if (c.op == ">") return ord > 0;
        throw TypeMismatch("unknown comparison " + c.op, loc);
    }

    Value eval_node(const CallNode& call, SourceLoc loc) const {
        const auto& name = call.name;
        auto arity = [&](std::size_t n) {
            if (call.args.size() != n)
                throw TypeMismatch(name + " takes " + std::to_string(n) + " argument(s)", loc);
        };
        if (name == "st") {
            arity(1);
            Germ x = germ_arg(*call.args[0]);
            return guard(loc, [&] { return Value{standard_part(x)}; });
        }
        if (name == "class") {
            arity(1);
            return Value{classify(germ_arg(*call.args[0]))};
        }
        if (name == "inv") {
            if (call.args.size() != 1 && call.args.size() != 2)
                throw TypeMismatch("inv takes 1 or 2 arguments", loc);
            Germ t = germ_arg(*call.args[0]);
            Germ t0 = call.args.size() == 2 ? germ_arg(*call.args[1]) : Germ{};
            return guard(loc, [&] { return checked(loc, inversion_map(t, t0)); });
        }
        if (name == "in_monad") {
            arity(2);
            return Value{in_monad(germ_arg(*call.args[0]), germ_arg(*call.args[1]))};
        }
        if (name == "in_galaxy") {
            arity(2);
            return Value{in_galaxy(germ_arg(*call.args[0]), germ_arg(*call.args[1]))};
        }
        if (name == "WW") {
            arity(2);
            Germ t = germ_arg(*call.args[0]);
            Germ u = germ_arg(*call.args[1]);
            return guard(loc, [&] { return Value{WalkableWorld(t, u)}; });
        }
        if (name == "rel") {
            arity(2);
            return guard(loc, [&] {
                return Value{ww_relation(world_arg(*call.args[0]), world_arg(*call.args[1]))};
            });
        }
        if (name == "member") {
            arity(2);
            return guard(loc, [&] {
                return Value{ww_member(world_arg(*call.args[0]), germ_arg(*call.args[1]))};
            });
        }
        if (name == "iso") {
            arity(2);
            return guard(loc, [&] {
                return checked(loc, ww_iso(world_arg(*call.args[0]), germ_arg(*call.args[1])));
            });
        }
        if (name == "case") {
            arity(2);
            Germ t0 = germ_arg(*call.args[0]);
            Germ u = germ_arg(*call.args[1]);
            return guard(loc, [&] { return Value{scaling_case(t0, u)}; });
        }
        if (name == "sit") {
            arity(2);
            Germ u = germ_arg(*call.args[0]);
            Germ v = germ_arg(*call.args[1]);
            return guard(loc, [&] { return Value{step_situation(u, v)}; });
        }
        if (name == "witness") {
            arity(1);
            Germ u = germ_arg(*call.args[0]);
            return guard(loc, [&] { return checked(loc, archimedean_witness(u)); });
        }
        if (name == "bound") {
            arity(1);
            Germ x = germ_arg(*call.args[0]);
            return guard(loc, [&] { return Value{ExactRational(x.eventual_sign_bound())}; });
        }
        throw TypeMismatch("unknown function '" + name + "'", loc);
    }

    // Germ-valued operand; results of st() coerce back into the field.
    Germ germ_arg(const Expr& e) const {
        Value v = eval(e);
        if (auto* g = std::get_if<Germ>(&v)) return *g;
        if (auto* r = std::get_if<ExactRational>(&v)) return Germ(*r);
        throw TypeMismatch(std::string("expected a field element, got ") + value_kind(v), e.loc);
    }

    WalkableWorld world_arg(const Expr& e) const {
        Value v = eval(e);
        if (auto* w = std::get_if<WalkableWorld>(&v)) return *w;
        throw TypeMismatch(std::string("expected a world, got ") + value_kind(v), e.loc);
    }

    Value checked(SourceLoc loc, Germ g) const {
        if (g.max_degree() > limit_) throw EvalError("DegreeLimit", loc);
        return Value{std::move(g)};
    }

    template <typename F>
    Value guard(SourceLoc loc, F&& body) const {
        try {
            return body();
        } catch (const EvalError&) {
            throw;
        } catch (const std::domain_error& e) {
            std::string what = e.what();
            throw EvalError(what.substr(0, what.find(':')), loc);
        }
    }

    int limit_;
};

}  // namespace lang
}  // namespace nonarch
