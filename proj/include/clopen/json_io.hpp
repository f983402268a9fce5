// Copyright 2026 The clopen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings for every value that crosses the command line:
//   set:          {"T":n,"transient":[...],"p":n,"R":[...]}  (canonical on
//                 output) with shorthand {"elems":[...]} or a bare array for
//                 finite sets; finite-universe sets are element arrays; pair
//                 universe members are {"pair":[a,b]} or {"yset": <set>}.
//   family:       {"universe":"nat"|{"finite":n}|"pairs","sets":[...]}
//   neighborhood: {"universe":...,"pos":[...],"neg":[...]}
// plus the report shapes for certificates and constructions.

#pragma once

#include <json.hpp>

#include "clopen/logic.hpp"
#include "clopen/witnesses.hpp"

namespace clopen::jsonio {

using nlohmann::json;

json upset_to_json(const UPSet& s);
UPSet upset_from_json(const json& j);

json universe_to_json(const Universe& u);
Universe universe_from_json(const json& j);

json groundset_to_json(const GroundSet& g);
GroundSet groundset_from_json(const Universe& u, const json& j);

json family_to_json(const FiniteFamily& f);
FiniteFamily family_from_json(const json& j);

json nbhd_to_json(const Neighborhood& n);
Neighborhood nbhd_from_json(const json& j);

json class_report_to_json(const ClassReport& r);
json ad_report_to_json(const AdReport& r);
json map_check_to_json(const MapCheck& m);
json counts_to_json(const ClassCounts& c);

json partial_fn_to_json(const PartialFn& f);
PartialFn partial_fn_from_json(const json& j);

json fn_space_to_json(const FnSpace& s);
FnSpace fn_space_from_json(const json& j);

json space_check_to_json(const SpaceCheck& c);

json endomap_to_json(const EndoMap& f);
EndoMap endomap_from_json(const json& j);

json certificate_to_json(const witnesses::SeparationCertificate& c);
json nontopology_to_json(const witnesses::NontopologyLatticeOutput& o);
json exclusion_to_json(const logic::ExclusionCertificate& c);
json collection_report_to_json(const logic::CollectionReport& r);

}  // namespace clopen::jsonio
