#pragma once

#include "json.hpp"
#include "sunjet/normalization.hpp"
#include "sunjet/rigidity.hpp"

namespace sunjet {

using json = nlohmann::ordered_json;

// Parse errors throw std::invalid_argument.

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

// [{"exponents": [...], "coeff": "p/q"}, ...]
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, int nvars);

// [{"component": i, "exponents": [...], "coeff": "p/q"}, ...], i 1-based.
json field_to_json(const VectorField& x);
VectorField field_from_json(const json& j, int n);

// {"n": n, "r": r, "terms": [field terms]}
json jet_to_json(const Jet& f);
Jet jet_from_json(const json& j);

// {"n": n, "m": [[...]], "k": k, "tau": "p/q"}; output adds "xi_basis".
json lattice_to_json(const LatticePresentation& l);
LatticePresentation lattice_from_json(const json& j);

json word_to_json(const GroupWord& w);
// Array of tokens or one string.
GroupWord word_from_json(const json& j);

json complex_to_json(const ComplexRational& z);
json an_to_json(const ANElement& g);
json matrix_to_json(const CMatrix& m);
json qmatrix_to_json(const QMatrix& m);
json qvector_to_json(const QVector& v);
json chart_affine_to_json(const ChartAffineData& d);

json normalization_to_json(const NormalizationResult& r);
json certificate_to_json(const ContractionCertificate& c);

}  // namespace sunjet
