#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mensura {

// Minimal deterministic SVG assembler: fixed viewport, coordinates at two
// decimals, no timestamps or generator tags.
class SvgCanvas {
public:
    SvgCanvas(double width, double height);

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0, const std::string& dash = "");
    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& stroke, double stroke_width = 1.0,
                  const std::string& dash = "", const std::string& fill = "none");
    void circle(double cx, double cy, double r, const std::string& fill,
                const std::string& stroke = "none");
    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& stroke = "none");
    void text(double x, double y, const std::string& content, double size = 12.0,
              const std::string& anchor = "start", const std::string& fill = "#000000");

    std::string finish() const;

private:
    double width_;
    double height_;
    std::string body_;
};

}  // namespace mensura
