#pragma once

#include "qpf/parser.hpp"

namespace qpf {

/// Full analysis output: a machine-readable JSON object with stable key order
/// (byte-identical across runs for identical input) and a human-readable
/// rendering of the same content.
struct Report {
    std::string json;
    std::string text;
};

/// Runs the pipeline: build -> radical (both algorithms) -> classify ->
/// pf_check -> (if split PF) form + automorphism + constant-degree check ->
/// (if a group action is present) skew/orbit/covering/transfer. Stage
/// refusals (not weakly basic, not split, ...) are reported, not thrown;
/// input and cap errors propagate.
Report analyze(const InputDocument& doc, const std::string& input_text);

/// 64-bit FNV-1a over a canonical serialization of the form blocks.
std::string form_digest(const BilinearForm& f);

}  // namespace qpf
