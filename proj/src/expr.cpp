#include "framelab/expr.hpp"

#include <cmath>
#include <stdexcept>

namespace framelab {
namespace detail {

enum class Op {
    Constant,
    Coord,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow, // base^c, c a fixed real exponent
    Sqrt,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Asinh,
    Exp,
    Log,
    Compose,
};

struct Expr {
    Op op;
    double value = 0.0; // Constant payload, or Pow exponent
    int axis = -1;      // Coord payload
    std::shared_ptr<const Expr> a;
    std::shared_ptr<const Expr> b;
    std::array<std::shared_ptr<const Expr>, 4> map{}; // Compose payload
};

using NodePtr = std::shared_ptr<const Expr>;

namespace {

NodePtr make_const(double v) {
    auto n = std::make_shared<Expr>();
    n->op = Op::Constant;
    n->value = v;
    return n;
}

bool const_val(const NodePtr& n, double* v) {
    if (n->op != Op::Constant)
        return false;
    if (v)
        *v = n->value;
    return true;
}

bool is_const(const NodePtr& n, double v) {
    return n->op == Op::Constant && n->value == v;
}

NodePtr unary(Op op, NodePtr a, double (*fold)(double)) {
    double va;
    if (const_val(a, &va))
        return make_const(fold(va));
    auto n = std::make_shared<Expr>();
    n->op = op;
    n->a = std::move(a);
    return n;
}

NodePtr add(NodePtr a, NodePtr b) {
    double va, vb;
    if (const_val(a, &va) && const_val(b, &vb))
        return make_const(va + vb);
    if (is_const(a, 0.0))
        return b;
    if (is_const(b, 0.0))
        return a;
    auto n = std::make_shared<Expr>();
    n->op = Op::Add;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr neg(NodePtr a) {
    double va;
    if (const_val(a, &va))
        return make_const(-va);
    if (a->op == Op::Neg)
        return a->a;
    auto n = std::make_shared<Expr>();
    n->op = Op::Neg;
    n->a = std::move(a);
    return n;
}

NodePtr sub(NodePtr a, NodePtr b) {
    double va, vb;
    if (const_val(a, &va) && const_val(b, &vb))
        return make_const(va - vb);
    if (is_const(b, 0.0))
        return a;
    if (is_const(a, 0.0))
        return neg(std::move(b));
    if (a.get() == b.get())
        return make_const(0.0);
    auto n = std::make_shared<Expr>();
    n->op = Op::Sub;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr mul(NodePtr a, NodePtr b) {
    double va, vb;
    if (const_val(a, &va) && const_val(b, &vb))
        return make_const(va * vb);
    if (is_const(a, 0.0) || is_const(b, 0.0))
        return make_const(0.0);
    if (is_const(a, 1.0))
        return b;
    if (is_const(b, 1.0))
        return a;
    if (is_const(a, -1.0))
        return neg(std::move(b));
    if (is_const(b, -1.0))
        return neg(std::move(a));
    auto n = std::make_shared<Expr>();
    n->op = Op::Mul;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr div(NodePtr a, NodePtr b) {
    double va, vb;
    if (const_val(a, &va) && const_val(b, &vb))
        return make_const(va / vb);
    if (is_const(a, 0.0))
        return make_const(0.0);
    if (is_const(b, 1.0))
        return a;
    auto n = std::make_shared<Expr>();
    n->op = Op::Div;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr powc(NodePtr base, double e) {
    if (e == 0.0)
        return make_const(1.0);
    if (e == 1.0)
        return base;
    double vb;
    if (const_val(base, &vb))
        return make_const(std::pow(vb, e));
    auto n = std::make_shared<Expr>();
    n->op = Op::Pow;
    n->value = e;
    n->a = std::move(base);
    return n;
}

} // namespace

double eval_node(const Expr* e, const Point& x,
                 std::unordered_map<const Expr*, double>& memo);

} // namespace detail

double eval_expr(const detail::Expr* e, const Point& x, EvalCache& cache) {
    return detail::eval_node(e, x, cache.memo_);
}

namespace detail {

double eval_node(const Expr* e, const Point& x,
                 std::unordered_map<const Expr*, double>& memo) {
    using std::size_t;
    switch (e->op) {
    case Op::Constant:
        return e->value;
    case Op::Coord:
        return x[static_cast<size_t>(e->axis)];
    default:
        break;
    }
    if (auto it = memo.find(e); it != memo.end())
        return it->second;
    double r = 0.0;
    switch (e->op) {
    case Op::Add:
        r = eval_node(e->a.get(), x, memo) + eval_node(e->b.get(), x, memo);
        break;
    case Op::Sub:
        r = eval_node(e->a.get(), x, memo) - eval_node(e->b.get(), x, memo);
        break;
    case Op::Mul:
        r = eval_node(e->a.get(), x, memo) * eval_node(e->b.get(), x, memo);
        break;
    case Op::Div:
        r = eval_node(e->a.get(), x, memo) / eval_node(e->b.get(), x, memo);
        break;
    case Op::Neg:
        r = -eval_node(e->a.get(), x, memo);
        break;
    case Op::Pow:
        r = std::pow(eval_node(e->a.get(), x, memo), e->value);
        break;
    case Op::Sqrt:
        r = std::sqrt(eval_node(e->a.get(), x, memo));
        break;
    case Op::Sin:
        r = std::sin(eval_node(e->a.get(), x, memo));
        break;
    case Op::Cos:
        r = std::cos(eval_node(e->a.get(), x, memo));
        break;
    case Op::Sinh:
        r = std::sinh(eval_node(e->a.get(), x, memo));
        break;
    case Op::Cosh:
        r = std::cosh(eval_node(e->a.get(), x, memo));
        break;
    case Op::Asinh:
        r = std::asinh(eval_node(e->a.get(), x, memo));
        break;
    case Op::Exp:
        r = std::exp(eval_node(e->a.get(), x, memo));
        break;
    case Op::Log:
        r = std::log(eval_node(e->a.get(), x, memo));
        break;
    case Op::Compose: {
        // Inner evaluation happens at the mapped point, so it gets its own memo.
        Point y{};
        for (int k = 0; k < 4; ++k)
            y[static_cast<std::size_t>(k)] =
                eval_node(e->map[static_cast<std::size_t>(k)].get(), x, memo);
        std::unordered_map<const Expr*, double> inner;
        r = eval_node(e->a.get(), y, inner);
        break;
    }
    default:
        throw std::logic_error("expr: unhandled op in eval");
    }
    memo.emplace(e, r);
    return r;
}

namespace {

using DerivMemo = std::unordered_map<const Expr*, NodePtr>;

NodePtr derivative_node(const NodePtr& e, int axis, DerivMemo& memo) {
    if (auto it = memo.find(e.get()); it != memo.end())
        return it->second;
    NodePtr r;
    switch (e->op) {
    case Op::Constant:
        r = make_const(0.0);
        break;
    case Op::Coord:
        r = make_const(e->axis == axis ? 1.0 : 0.0);
        break;
    case Op::Add:
        r = add(derivative_node(e->a, axis, memo), derivative_node(e->b, axis, memo));
        break;
    case Op::Sub:
        r = sub(derivative_node(e->a, axis, memo), derivative_node(e->b, axis, memo));
        break;
    case Op::Mul:
        r = add(mul(derivative_node(e->a, axis, memo), e->b),
                mul(e->a, derivative_node(e->b, axis, memo)));
        break;
    case Op::Div:
        // (a'b - ab') / b^2
        r = div(sub(mul(derivative_node(e->a, axis, memo), e->b),
                    mul(e->a, derivative_node(e->b, axis, memo))),
                mul(e->b, e->b));
        break;
    case Op::Neg:
        r = neg(derivative_node(e->a, axis, memo));
        break;
    case Op::Pow:
        // c * a^(c-1) * a'
        r = mul(mul(make_const(e->value), powc(e->a, e->value - 1.0)),
                derivative_node(e->a, axis, memo));
        break;
    case Op::Sqrt: {
        auto n = std::make_shared<Expr>();
        n->op = Op::Sqrt;
        n->a = e->a;
        r = div(derivative_node(e->a, axis, memo), mul(make_const(2.0), NodePtr(n)));
        break;
    }
    case Op::Sin: {
        auto c = std::make_shared<Expr>();
        c->op = Op::Cos;
        c->a = e->a;
        r = mul(NodePtr(c), derivative_node(e->a, axis, memo));
        break;
    }
    case Op::Cos: {
        auto s = std::make_shared<Expr>();
        s->op = Op::Sin;
        s->a = e->a;
        r = neg(mul(NodePtr(s), derivative_node(e->a, axis, memo)));
        break;
    }
    case Op::Sinh: {
        auto c = std::make_shared<Expr>();
        c->op = Op::Cosh;
        c->a = e->a;
        r = mul(NodePtr(c), derivative_node(e->a, axis, memo));
        break;
    }
    case Op::Cosh: {
        auto s = std::make_shared<Expr>();
        s->op = Op::Sinh;
        s->a = e->a;
        r = mul(NodePtr(s), derivative_node(e->a, axis, memo));
        break;
    }
    case Op::Asinh: {
        // a' / sqrt(1 + a^2)
        auto sq = std::make_shared<Expr>();
        sq->op = Op::Sqrt;
        sq->a = add(make_const(1.0), mul(e->a, e->a));
        r = div(derivative_node(e->a, axis, memo), NodePtr(sq));
        break;
    }
    case Op::Exp:
        r = mul(e, derivative_node(e->a, axis, memo));
        break;
    case Op::Log:
        r = div(derivative_node(e->a, axis, memo), e->a);
        break;
    case Op::Compose: {
        // chain rule: sum_k (d_k f)(m(x)) * d_axis m_k(x)
        NodePtr sum = make_const(0.0);
        for (int k = 0; k < 4; ++k) {
            auto mk = e->map[static_cast<std::size_t>(k)];
            NodePtr dm = derivative_node(mk, axis, memo);
            if (is_const(dm, 0.0))
                continue;
            DerivMemo inner; // f is differentiated along its own coordinates
            NodePtr df = derivative_node(e->a, k, inner);
            if (is_const(df, 0.0))
                continue;
            auto comp = std::make_shared<Expr>();
            comp->op = Op::Compose;
            comp->a = df;
            comp->map = e->map;
            sum = add(sum, mul(NodePtr(comp), dm));
        }
        r = sum;
        break;
    }
    default:
        throw std::logic_error("expr: unhandled op in derivative");
    }
    memo.emplace(e.get(), r);
    return r;
}

} // namespace
} // namespace detail

ScalarField::ScalarField() : node_(detail::make_const(0.0)) {}
ScalarField::ScalarField(double constant) : node_(detail::make_const(constant)) {}
ScalarField::ScalarField(std::shared_ptr<const detail::Expr> node) : node_(std::move(node)) {}

ScalarField ScalarField::constant(double c) { return ScalarField(c); }

ScalarField ScalarField::coordinate(int axis) {
    if (axis < 0 || axis > 3)
        throw std::invalid_argument("ScalarField::coordinate: axis out of range");
    auto n = std::make_shared<detail::Expr>();
    n->op = detail::Op::Coord;
    n->axis = axis;
    return ScalarField(std::move(n));
}

double ScalarField::operator()(const Point& x) const {
    EvalCache cache;
    return eval_expr(node_.get(), x, cache);
}

double ScalarField::eval(const Point& x, EvalCache& cache) const {
    return eval_expr(node_.get(), x, cache);
}

ScalarField ScalarField::derivative(int axis) const {
    if (axis < 0 || axis > 3)
        throw std::invalid_argument("ScalarField::derivative: axis out of range");
    detail::DerivMemo memo;
    return ScalarField(detail::derivative_node(node_, axis, memo));
}

bool ScalarField::is_zero() const {
    return node_->op == detail::Op::Constant && node_->value == 0.0;
}

bool ScalarField::is_constant(double* value) const {
    return detail::const_val(node_, value);
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    return ScalarField(detail::add(a.node(), b.node()));
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    return ScalarField(detail::sub(a.node(), b.node()));
}
ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    return ScalarField(detail::mul(a.node(), b.node()));
}
ScalarField operator/(const ScalarField& a, const ScalarField& b) {
    return ScalarField(detail::div(a.node(), b.node()));
}
ScalarField operator-(const ScalarField& a) { return ScalarField(detail::neg(a.node())); }

ScalarField pow(const ScalarField& base, double exponent) {
    return ScalarField(detail::powc(base.node(), exponent));
}
ScalarField sqrt(const ScalarField& a) {
    return ScalarField(detail::unary(detail::Op::Sqrt, a.node(),
                                     +[](double v) { return std::sqrt(v); }));
}
ScalarField sin(const ScalarField& a) {
    return ScalarField(detail::unary(detail::Op::Sin, a.node(),
                                     +[](double v) { return std::sin(v); }));
}
ScalarField cos(const ScalarField& a) {
    return ScalarField(detail::unary(detail::Op::Cos, a.node(),
                                     +[](double v) { return std::cos(v); }));
}
ScalarField sinh(const ScalarField& a) {
    return ScalarField(detail::unary(detail::Op::Sinh, a.node(),
                                     +[](double v) { return std::sinh(v); }));
}
ScalarField cosh(const ScalarField& a) {
    return ScalarField(detail::unary(detail::Op::Cosh, a.node(),
                                     +[](double v) { return std::cosh(v); }));
}
ScalarField asinh(const ScalarField& a) {
    return ScalarField(detail::unary(detail::Op::Asinh, a.node(),
                                     +[](double v) { return std::asinh(v); }));
}
ScalarField exp(const ScalarField& a) {
    return ScalarField(detail::unary(detail::Op::Exp, a.node(),
                                     +[](double v) { return std::exp(v); }));
}
ScalarField log(const ScalarField& a) {
    return ScalarField(detail::unary(detail::Op::Log, a.node(),
                                     +[](double v) { return std::log(v); }));
}

ScalarField compose(const ScalarField& f, const std::array<ScalarField, 4>& map) {
    double fv;
    if (f.is_constant(&fv))
        return ScalarField(fv);
    auto n = std::make_shared<detail::Expr>();
    n->op = detail::Op::Compose;
    n->a = f.node();
    for (std::size_t k = 0; k < 4; ++k)
        n->map[k] = map[k].node();
    return ScalarField(std::move(n));
}

} // namespace framelab
