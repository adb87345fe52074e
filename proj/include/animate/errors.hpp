#pragma once

#include <stdexcept>
#include <string>

namespace animate {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlignmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptimizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pipeline stage failure; carries the stage name plus frame/timestep context when known.
struct StageError : std::runtime_error {
    StageError(std::string stage_name, const std::string& detail, int frame = -1, int timestep = -1)
        : std::runtime_error(format(stage_name, detail, frame, timestep)),
          stage(std::move(stage_name)),
          frame_index(frame),
          timestep_index(timestep) {}

    std::string stage;
    int frame_index;
    int timestep_index;

private:
    static std::string format(const std::string& stage, const std::string& detail, int frame,
                              int timestep) {
        std::string msg = "stage '" + stage + "' failed";
        if (frame >= 0) msg += " at frame " + std::to_string(frame);
        if (timestep >= 0) msg += ", timestep " + std::to_string(timestep);
        msg += ": " + detail;
        return msg;
    }
};

}  // namespace animate
