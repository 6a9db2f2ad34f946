#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fracwave::cli {

/// Minimal static line chart written as an SVG document.
class LinePlot {
 public:
  LinePlot(std::string title, std::string x_label, std::string y_label);

  void add_series(std::string label, std::vector<double> x, std::vector<double> y,
                  bool dashed = false);

  std::string render() const;

  /// Throws std::ios_base::failure on write errors.
  void write(const std::filesystem::path& path) const;

 private:
  struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed;
  };

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
};

}  // namespace fracwave::cli
