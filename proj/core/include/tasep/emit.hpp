#pragma once

// JSON and CSV serialisation of results. Rationals are written as "p/q"
// strings; floats appear only in Monte Carlo output, next to their
// standard errors. Object keys keep insertion order.

#include "tasep/continuum.hpp"
#include "tasep/core.hpp"
#include "tasep/markov.hpp"
#include "tasep/poly.hpp"
#include "tasep/rs.hpp"
#include "tasep/tableaux.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include <string>

namespace tasep::emit {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };
Format parse_format(std::string_view name);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"vars": n, "terms": [{"coef": "p/q", "exps": [...]}, ...]}
Json to_json(const poly::MultiPoly& p);
poly::MultiPoly poly_from_json(const Json& j);

/// {"n": n, "p": {"123": "p/q", ...}}
Json to_json(const continuum::PermDist& d);
continuum::PermDist perm_dist_from_json(const Json& j);

/// {"n": n, "c": [[...], ...]}
Json to_json(const continuum::CorrTable& c);
continuum::CorrTable corr_table_from_json(const Json& j);

/// {"n", "samples", "cells": [{"i", "j", "estimate", "stderr", "conjecture"}]}
Json to_json(const continuum::CorrEstimate& c);

/// {"type": [...], "N": N, "p": {"word": "p/q"}}
Json to_json(const markov::StationaryDist& d, const TypeVector& type);

Json to_json(const markov::EmpiricalDist& d);

Json to_json(const rs::RsStationary& s);

Json to_json(const tab::Tableau& t);

/// i,j,value,conjecture
std::string corr_table_csv(const continuum::CorrTable& c);
/// i,j,estimate,stderr,conjecture
std::string corr_estimate_csv(const continuum::CorrEstimate& c);
/// perm,p
std::string perm_dist_csv(const continuum::PermDist& d);
/// word,p
std::string stationary_csv(const markov::StationaryDist& d);
/// pattern,p
std::string rs_stationary_csv(const rs::RsStationary& s);

/// Fixed formatting for Monte Carlo floats (17 significant digits).
std::string format_double(double x);

}  // namespace tasep::emit
