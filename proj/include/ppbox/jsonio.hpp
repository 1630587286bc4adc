#pragma once

#include <string>

#include "json.hpp"
#include "ppbox/kasteleyn.hpp"

namespace ppbox {

nlohmann::json graph_to_json(const WeightedGraph& g);

template <class R>
nlohmann::json block_to_json(const SlicedBlock<R>& blk);
template <class R>
std::string block_to_csv(const SlicedBlock<R>& blk);

nlohmann::json flatness_to_json(const FlatnessReport& rep);
nlohmann::json terms_to_json(const TermReport& rep);
nlohmann::json routes_to_json(const std::vector<CountResult>& results);

}  // namespace ppbox
