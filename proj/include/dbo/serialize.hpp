#pragma once

#include "dbo/report.hpp"
#include "dbo/sequence.hpp"
#include "dbo/symbols.hpp"
#include "dbo/tensor.hpp"

namespace dbo {

/// Sequence files: { "d": int, "entries": [ [c1..cd, re, im], ... ] }.
/// Absent points are zero.
ojson sequenceToJson(const WeightedSequence& f);
WeightedSequence sequenceFromJson(const ojson& j);

/// Symbol registry entries: { "name": ..., numeric params }. Only named
/// symbol families are accepted from files.
SymbolPtr symbolFromJson(const ojson& j, int d);

/// Tensor files: { "d": int, "family": string, "params": { ... } } with
/// per-family payloads (dense entries, theta + M, symbol + mode, vhat,
/// matrices as entry lists).
Tensor tensorFromJson(const ojson& j);

}  // namespace dbo
