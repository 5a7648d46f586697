#include "essbasis/orders.hpp"

#include <sstream>

#include "essbasis/errors.hpp"

namespace essbasis {

namespace {

int sgn(long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int cmp_lex(const IVec& a, const IVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return sgn(a[i] - b[i]);
    return 0;
}

int cmp_from_right(const IVec& a, const IVec& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return sgn(a[i] - b[i]);
    return 0;
}

long degree(const IVec& a, const std::vector<int>& w) {
    long s = 0;
    if (w.empty()) {
        for (int x : a) s += x;
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(w[i]) * a[i];
    }
    return s;
}

}  // namespace

int MonomialOrder::compare(const IVec& a, const IVec& b) const {
    if (a.size() != b.size()) throw invalid_input("exponent vectors of different length");
    if (kind == OrderKind::wdegrevlex && weights.size() != a.size())
        throw invalid_input("wdegrevlex weight vector has wrong length");
    switch (kind) {
        case OrderKind::lex:
            return cmp_lex(a, b);
        case OrderKind::neglex:
            return cmp_lex(b, a);
        case OrderKind::invlex:
            return cmp_from_right(a, b);
        case OrderKind::deglex: {
            int d = sgn(degree(a, {}) - degree(b, {}));
            return d != 0 ? d : cmp_lex(a, b);
        }
        case OrderKind::degrevlex: {
            int d = sgn(degree(a, {}) - degree(b, {}));
            return d != 0 ? d : -cmp_from_right(a, b);
        }
        case OrderKind::wdegrevlex: {
            int d = sgn(degree(a, weights) - degree(b, weights));
            return d != 0 ? d : -cmp_from_right(a, b);
        }
    }
    return 0;
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    MonomialOrder o;
    if (name == "lex")
        o.kind = OrderKind::lex;
    else if (name == "invlex")
        o.kind = OrderKind::invlex;
    else if (name == "neglex")
        o.kind = OrderKind::neglex;
    else if (name == "deglex")
        o.kind = OrderKind::deglex;
    else if (name == "degrevlex")
        o.kind = OrderKind::degrevlex;
    else if (name == "wdegrevlex")
        o.kind = OrderKind::wdegrevlex;
    else
        throw invalid_input("unknown monomial order '" + name + "'");
    if (o.kind == OrderKind::wdegrevlex) {
        if (colon == std::string::npos)
            throw invalid_input("wdegrevlex requires weights, e.g. wdegrevlex:1,2,1");
        std::stringstream ss(text.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int w = std::stoi(tok);
            if (w <= 0) throw invalid_input("wdegrevlex weights must be positive");
            o.weights.push_back(w);
        }
        if (o.weights.empty()) throw invalid_input("wdegrevlex requires at least one weight");
    } else if (colon != std::string::npos) {
        throw invalid_input("only wdegrevlex takes weights");
    }
    return o;
}

std::string MonomialOrder::to_string() const {
    switch (kind) {
        case OrderKind::lex:
            return "lex";
        case OrderKind::invlex:
            return "invlex";
        case OrderKind::neglex:
            return "neglex";
        case OrderKind::deglex:
            return "deglex";
        case OrderKind::degrevlex:
            return "degrevlex";
        case OrderKind::wdegrevlex: {
            std::string s = "wdegrevlex:";
            for (std::size_t i = 0; i < weights.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(weights[i]);
            }
            return s;
        }
    }
    return "?";
}

IVec min_of(const MonomialOrder& order, const std::vector<IVec>& vecs) {
    if (vecs.empty()) throw invalid_input("min_of on an empty set");
    const IVec* best = &vecs[0];
    for (const IVec& v : vecs)
        if (order.less(v, *best)) best = &v;
    return *best;
}

}  // namespace essbasis
