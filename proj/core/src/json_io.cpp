#include "essbasis/json_io.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace essbasis {

namespace {

json dim_to_json(const Int& dim) {
    if (dim.fits_ulong_p()) return dim.get_ui();
    return dim.get_str();
}

json ivec_list(const std::vector<IVec>& vecs) {
    json arr = json::array();
    for (const IVec& v : vecs) arr.push_back(v);
    return arr;
}

json generators_json(const std::vector<std::pair<Weight, int>>& gens) {
    json arr = json::array();
    for (const auto& [w, m] : gens) arr.push_back({{"weight", w}, {"multiplicity", m}});
    return arr;
}

}  // namespace

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

json basis_to_json(const RootSystem& rs, const BirationalSequence& seq,
                   const MonomialOrder& order, const EssentialSet& es) {
    json j;
    j["family"] = std::string(1, rs.family());
    j["rank"] = rs.rank();
    j["weight"] = es.lambda;
    j["sequence"] = ivec_list(sequence_roots(rs, seq));
    j["order"] = order.to_string();
    j["dimension"] = dim_to_json(es.dimension);
    j["monomials"] = ivec_list(es.exponents);
    j["generators"] = generators_json(es.generators);
    return j;
}

json kodaira_to_json(const RootSystem& rs, const BirationalSequence& seq,
                     const MonomialOrder& order, const KodairaResult& res) {
    json j;
    j["family"] = std::string(1, rs.family());
    j["rank"] = rs.rank();
    j["weight"] = res.lambda;
    j["sequence"] = ivec_list(sequence_roots(rs, seq));
    j["order"] = order.to_string();
    j["degree"] = res.degree;
    j["counts"] = res.counts;
    json degs = json::array();
    for (const KodairaDegree& d : res.degrees) {
        json e;
        e["k"] = d.k;
        e["dimension"] = dim_to_json(d.dimension);
        e["new"] = ivec_list(d.new_generators);
        e["monomials"] = ivec_list(d.monomials);
        degs.push_back(std::move(e));
    }
    j["degrees"] = std::move(degs);
    if (res.budget_hit) j["truncated"] = true;
    return j;
}

json census_to_json(const RootSystem& rs, const CensusResult& res) {
    json j;
    j["family"] = std::string(1, rs.family());
    j["rank"] = rs.rank();
    j["weight"] = res.lambda;
    j["classes"] = res.words.size();
    json table = json::array();
    for (const CensusEntry& e : res.table)
        table.push_back({{"generators", generators_json(e.generators)}, {"frequency", e.frequency}});
    j["table"] = std::move(table);
    json words = json::array();
    for (std::size_t i = 0; i < res.words.size(); ++i)
        words.push_back(
            {{"word", res.words[i]}, {"generators", generators_json(res.per_word_generators[i])}});
    j["cases"] = std::move(words);
    return j;
}

namespace {

// "fundamentals + 2x(1,1)" style summary; fundamental weights are reported
// collectively when every one of them occurs.
std::string generators_summary(int rank, const std::vector<std::pair<Weight, int>>& gens) {
    std::map<Weight, int> rest(gens.begin(), gens.end());
    int fund_count = 0;
    for (int i = 0; i < rank; ++i) {
        Weight f(rank, 0);
        f[i] = 1;
        auto it = rest.find(f);
        if (it != rest.end() && it->second >= 1) ++fund_count;
    }
    std::ostringstream os;
    bool first = true;
    if (fund_count == rank) {
        os << "fundamentals";
        first = false;
        for (int i = 0; i < rank; ++i) {
            Weight f(rank, 0);
            f[i] = 1;
            if (--rest[f] == 0) rest.erase(f);
        }
    }
    for (const auto& [w, m] : rest) {
        if (!first) os << " + ";
        if (m != 1) os << m << "x";
        os << weight_to_string(w);
        first = false;
    }
    if (first) os << "none";
    return os.str();
}

void print_exponents_by_degree(std::ostream& os, const std::vector<IVec>& exps) {
    std::map<int, std::vector<const IVec*>> by_deg;
    for (const IVec& e : exps) by_deg[coord_sum(e)].push_back(&e);
    for (const auto& [deg, list] : by_deg) {
        os << "  degree " << deg << ":";
        for (const IVec* e : list) {
            os << " (";
            for (std::size_t i = 0; i < e->size(); ++i) os << (i ? "," : "") << (*e)[i];
            os << ")";
        }
        os << "\n";
    }
}

}  // namespace

void print_basis_text(std::ostream& os, const RootSystem& rs, const BirationalSequence& seq,
                      const MonomialOrder& order, const EssentialSet& es) {
    os << "type " << rs.type_string() << ", highest weight " << weight_to_string(es.lambda)
       << ", order " << order.to_string() << "\n";
    os << "sequence:";
    for (int idx : seq.root_indices) os << " " << rs.root_to_string(idx);
    if (seq.origin != "custom") os << "  [" << seq.origin << "]";
    if (seq.partial) os << "  (partial: shorter than the number of positive roots)";
    os << "\n";
    os << "dimension " << es.dimension.get_str() << "\n";
    os << "monomials by total degree:\n";
    print_exponents_by_degree(os, es.exponents);
    os << "generators: " << generators_summary(rs.rank(), es.generators)
       << (es.fully_decomposed ? "" : "  (not decomposable below the weight itself)") << "\n";
}

void print_kodaira_text(std::ostream& os, const RootSystem& rs, const KodairaResult& res) {
    os << "type " << rs.type_string() << ", highest weight " << weight_to_string(res.lambda)
       << ", truncation degree " << res.degree << "\n";
    os << "new generators per degree:";
    for (long c : res.counts) os << " " << c;
    os << "\n";
    for (const KodairaDegree& d : res.degrees) {
        os << "degree " << d.k << ": dim " << d.dimension.get_str() << ", "
           << d.new_generators.size() << " new generator(s)\n";
        print_exponents_by_degree(os, d.new_generators);
    }
    if (res.budget_hit) os << "stopped early: budget exhausted\n";
}

void print_census_text(std::ostream& os, const RootSystem& rs, const CensusResult& res) {
    os << "type " << rs.type_string() << ", highest weight " << weight_to_string(res.lambda)
       << ": " << res.words.size() << " commutation class(es)\n";
    for (const CensusEntry& e : res.table)
        os << "  " << e.frequency << " case(s): " << generators_summary(rs.rank(), e.generators)
           << "\n";
}

}  // namespace essbasis
