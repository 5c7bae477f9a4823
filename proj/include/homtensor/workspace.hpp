#pragma once

#include "homtensor/algebra.hpp"
#include "homtensor/representation.hpp"

#include <map>
#include <string>

namespace homtensor {

// Named-object collections parsed from a workspace file. All scalars appear
// in files as exact "p/q" strings; indices are 1-based in files and 0-based
// here. Cross-references are resolved at parse time.

struct RepresentationEntry {
    std::string algebra_ref;
    Representation value;
};

struct LeibnizRepresentationEntry {
    std::string algebra_ref;
    LeibnizRepresentation value;
};

struct TensorEntry {
    std::string rep_ref;
    Matrix matrix;
};

struct CochainEntry {
    std::string rep_ref;
    Matrix matrix; // degree-1 cochain: a linear map V -> L
};

struct DeformationEntry {
    std::string tensor_ref;
    Matrix infinitesimal;
};

struct WitnessEntry {
    std::string algebra_ref;
    Vec a;
    Vec b;
};

struct Workspace {
    std::string format_version = "1";
    std::map<std::string, ThreeHomLieAlgebra> algebras;
    std::map<std::string, HomLeibnizAlgebra> hom_leibniz_algebras;
    std::map<std::string, ThreeHomLeibnizAlgebra> leibniz_algebras;
    std::map<std::string, RepresentationEntry> representations;
    std::map<std::string, LeibnizRepresentationEntry> leibniz_representations;
    std::map<std::string, TensorEntry> tensors;
    std::map<std::string, CochainEntry> cochains;
    std::map<std::string, DeformationEntry> deformations;
    std::map<std::string, WitnessEntry> witnesses;

    bool has_object(const std::string& name) const;
};

/// Parses a workspace file. Throws ParseError with location context on
/// malformed input, unresolved references, or dimension mismatches.
Workspace parse_workspace_file(const std::string& path);
Workspace parse_workspace_text(const std::string& text);

/// Deterministic canonical rendering (sorted names, exact scalars).
std::string render_workspace(const Workspace& ws);
void write_workspace_file(const Workspace& ws, const std::string& path);

} // namespace homtensor
