#include "tropic/json_io.hpp"

#include "json.hpp"

namespace tropic::json_io {

using Json = nlohmann::ordered_json;

std::string polytope_json(const polytope::LatticePolytope& p)
{
    Json j;
    j["dim"] = p.dim();
    j["empty"] = p.is_empty();
    j["vertices"] = p.vertices();
    return j.dump();
}

std::string complex_json(const sphdual::SphericalComplex& c, std::optional<bool> outer,
                         std::optional<std::string> warning)
{
    Json j;
    j["dim"] = c.dim();
    j["full_sphere"] = c.is_full_sphere();
    if (outer)
        j["outer"] = *outer;
    if (warning)
        j["warning"] = *warning;
    Json cells = Json::array();
    for (const auto& cell : c.cells())
    {
        Json e;
        e["eq"] = cell.system.equalities();
        e["ineq"] = cell.system.inequalities();
        cells.push_back(std::move(e));
    }
    j["cells"] = std::move(cells);
    return j.dump();
}

std::string slopes_json(std::size_t h, const std::set<slopes::BoundaryCurveCoordinate>& coordinates)
{
    Json j;
    j["h"] = h;
    Json coords = Json::array(), slopes = Json::array();
    for (const auto& c : coordinates)
    {
        coords.push_back(c.entries());
        if (h == 1)
            slopes.push_back(slopes::slope_of(c));
    }
    j["coordinates"] = std::move(coords);
    j["slopes"] = std::move(slopes);
    return j.dump();
}

std::string error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> position)
{
    Json j;
    j["error"] = kind;
    j["message"] = message;
    if (position)
        j["position"] = *position;
    return j.dump();
}

} // namespace tropic::json_io
