#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rppg/error.hpp"

namespace rppg {

enum class Activity { Rest, BriskWalk, Exercise };

const char* activity_name(Activity a);           // "rest" | "walk" | "exercise"
Activity activity_from_name(const std::string&);  // inverse, throws Error

struct Pixel {
    std::uint8_t r = 0, g = 0, b = 0;
};

// One RGB frame, 8-bit channels, row-major.
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<Pixel> pixels;

    Frame() = default;
    Frame(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * h) {
        require(w > 0 && h > 0, "Frame: non-positive dimensions");
    }
    const Pixel& at(int row, int col) const { return pixels[static_cast<size_t>(row) * width + col]; }
    Pixel& at(int row, int col) { return pixels[static_cast<size_t>(row) * width + col]; }
};

struct FrameSequence {
    std::vector<Frame> frames;
    double frame_rate = 0.0;  // fps
    std::string subject_id;
    Activity activity = Activity::Rest;

    size_t size() const { return frames.size(); }
};

struct Point {
    int x = 0;  // column
    int y = 0;  // row
};

// One point list per frame. A single entry may be broadcast across all
// frames when the manifest flags it.
struct LandmarkSet {
    std::vector<std::vector<Point>> points;

    size_t size() const { return points.size(); }
};

struct PpgSignal {
    std::vector<double> samples;
    double sample_rate = 0.0;  // Hz
    std::string subject_id;
    Activity activity = Activity::Rest;
};

struct ManifestRecord {
    std::string subject_id;
    Activity activity = Activity::Rest;
    std::string frames_path;     // directory of frame images
    std::string landmarks_path;  // JSON file
    std::string ppg_path;        // CSV file
    bool broadcast_landmarks = false;
};

struct DatasetManifest {
    std::vector<ManifestRecord> records;
};

// Green-channel plane of one frame.
struct GreenPlane {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // row-major, 0..255
};

inline constexpr int kFeatureSide = 20;
inline constexpr int kFeatureDim = kFeatureSide * kFeatureSide;  // 400

// Per-frame feature rows for one recording, row-major n x 400, values in [0,1].
struct FeatureMatrix {
    size_t rows = 0;
    std::vector<double> data;
    std::string subject_id;
    Activity activity = Activity::Rest;

    const double* row(size_t i) const { return data.data() + i * kFeatureDim; }
    double* row(size_t i) { return data.data() + i * kFeatureDim; }
};

struct GroundTruthLabels {
    double pr_bpm = 0.0;
    double lf = 0.0;
    double hf = 0.0;
    std::string subject_id;
    Activity activity = Activity::Rest;
};

}  // namespace rppg
