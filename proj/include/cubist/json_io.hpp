#ifndef CUBIST_JSON_IO_HPP
#define CUBIST_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cubist/cube_complex.hpp"
#include "cubist/graph.hpp"
#include "cubist/maps.hpp"
#include "cubist/raag.hpp"

namespace cubist {

// Graph wire format:
//   {"vertices": ["v0", ...],
//    "edges": [["v0","v1"], ...],
//    "orientation": [["tail","head"], ...]}   (optional)
// Unknown keys are rejected.
SimplicialGraph graph_from_json(const nlohmann::json& j);
SimplicialGraph graph_from_json_text(const std::string& text);
nlohmann::json graph_to_json(const SimplicialGraph& g);

// Morphism wire format:
//   {"source": <graph>, "target": <graph>, "vertex_map": [["s","t"], ...]}
GraphMorphism morphism_from_json(const nlohmann::json& j);
nlohmann::json morphism_to_json(const GraphMorphism& m);

// Complex wire format:
//   {"cubes": {"0": [label, ...], "1": [...], ...},
//    "faces": [{"dim": d, "cube": label, "dir": i, "side": s, "facet": label}, ...],
//    "edge_labels": [{"edge": label, "generator": g, "sign": s}, ...]}
// where a label is the list of its simplices, each ["v"] or ["u","v"].
CubeComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const CubeComplex& x);

nlohmann::json certificate_to_json(const RaagPresentation& p, const MoveCertificate& cert);
MoveCertificate certificate_from_json(const RaagPresentation& p, const nlohmann::json& j);

nlohmann::json isometry_report_to_json(const IsometryReport& report);
nlohmann::json presentation_to_json(const Presentation& pres);

}  // namespace cubist

#endif
