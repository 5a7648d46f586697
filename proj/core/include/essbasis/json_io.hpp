#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "essbasis/essential.hpp"
#include "essbasis/monoid.hpp"

namespace essbasis {

using json = nlohmann::ordered_json;

json basis_to_json(const RootSystem& rs, const BirationalSequence& seq,
                   const MonomialOrder& order, const EssentialSet& es);
json kodaira_to_json(const RootSystem& rs, const BirationalSequence& seq,
                     const MonomialOrder& order, const KodairaResult& res);
json census_to_json(const RootSystem& rs, const CensusResult& res);

void print_basis_text(std::ostream& os, const RootSystem& rs, const BirationalSequence& seq,
                      const MonomialOrder& order, const EssentialSet& es);
void print_kodaira_text(std::ostream& os, const RootSystem& rs, const KodairaResult& res);
void print_census_text(std::ostream& os, const RootSystem& rs, const CensusResult& res);

std::string weight_to_string(const Weight& w);

}  // namespace essbasis
