#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace camflow::cli {

namespace fs = std::filesystem;

/// Everything a subcommand needs, filled from the command line.
struct RunConfig {
  std::string command;  ///< e.g. "flow camera"

  fs::path depth;
  fs::path trajectory;
  fs::path image;
  fs::path object_flow;  ///< directory of per-frame .flo files
  fs::path mask;
  fs::path input;
  fs::path estimated;
  fs::path ground_truth;
  fs::path frames_dir;
  std::vector<fs::path> clips;
  fs::path output;  ///< file or directory, per subcommand

  int width = 576;
  int height = 320;
  int frames = 14;
  std::string profile = "fvsm";

  std::string kind = "right";
  double magnitude = 1.0;
  std::optional<double> focal;  ///< defaults to width / 2
  double radius = 1.0;
  double angle = 90.0;
  double look_at_depth = 5.0;
  double subject_depth = 5.0;
  double dolly = 2.5;

  double threshold = 1.0;
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  int row = 0;
  std::optional<double> max_magnitude;
  bool depth_at_displaced = false;
  bool keep_going = false;
};

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns 0 iff every requested artifact was written; usage errors return
/// a nonzero CLI11 code, runtime failures 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "flow_07.flo"-style name for frame `t` of a `frame_count`-frame clip.
std::string frame_file(const std::string& prefix, std::size_t t, std::size_t frame_count,
                       const std::string& extension);

}  // namespace camflow::cli
