#pragma once

#include <string>

#include "pspan/bounds.hpp"
#include "pspan/obstruction.hpp"

namespace pspan {

/// Structured certificate document:
///   {"M":..., "N":..., "sPrime":..., "bound":..., "filtration":...,
///    "support":[[i,j,k], ...]}
std::string certificate_to_json(const Certificate& cert);

/// Parses a certificate document; throws std::runtime_error on malformed
/// input (wrong types, invalid triples, missing fields).
Certificate certificate_from_json(const std::string& text);

std::string report_to_json(const BoundReport& rep);

/// Parses a bound-report document (inverse of report_to_json).
BoundReport report_from_json(const std::string& text);

} // namespace pspan
