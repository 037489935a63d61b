#pragma once

#include <string>

#include "affcov/drawing.hpp"

namespace affcov {

enum class ExportFormat { svg2d, svg_iso3d, obj };

ExportFormat export_format_from_string(const std::string& s);

/// Edges, vertices and the witness lines (dashed) of a 2D drawing.
std::string export_svg2d(const VerifiedDrawing& d, const CoverWitness* w = nullptr);
/// Isometric projection of a 3D drawing; edges and vertices take the colour
/// of their witness object.
std::string export_svg_iso3d(const VerifiedDrawing& d, const CoverWitness* w = nullptr);
/// Wavefront OBJ: one vertex per point, one polyline per edge.
std::string export_obj(const VerifiedDrawing& d);

/// Throws GeometryError on a dimension mismatch.
std::string export_drawing(const VerifiedDrawing& d, const CoverWitness* w, ExportFormat f);

}  // namespace affcov
