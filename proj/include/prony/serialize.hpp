#ifndef PRONY_SERIALIZE_HPP
#define PRONY_SERIALIZE_HPP

#include <iosfwd>

#include <json.hpp>

#include "prony/types.hpp"

namespace prony {

// {"nodes":[[re,im],...], "mults":[...], "coeffs":[[[re,im],...],...],
//  "kind":"polynomial"} and {"t":0,"p":1,"n":8}.
nlohmann::json signal_to_json(const PronySignal& sig);
PronySignal signal_from_json(const nlohmann::json& j);
nlohmann::json grid_to_json(const SamplingGrid& grid);
SamplingGrid grid_from_json(const nlohmann::json& j);

// CSV with header "k,re,im" and an "# eps=..." comment line.
void write_measurements_csv(std::ostream& os, const MeasurementVector& meas);
MeasurementVector read_measurements_csv(std::istream& is);

// One complex entry per cell as "re+imi" text.
void write_matrix_csv(std::ostream& os, const cmat& m);

std::string format_complex(cx v);

}  // namespace prony

#endif
