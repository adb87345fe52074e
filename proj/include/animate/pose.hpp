#pragma once

#include <array>
#include <string>
#include <vector>

#include "animate/image.hpp"
#include "animate/util.hpp"

namespace animate {

inline constexpr int kJointCount = 18;

/// COCO-18 joint indices (OpenPose layout).
enum Joint : int {
    kNose = 0,
    kNeck = 1,
    kRShoulder = 2,
    kRElbow = 3,
    kRWrist = 4,
    kLShoulder = 5,
    kLElbow = 6,
    kLWrist = 7,
    kRHip = 8,
    kRKnee = 9,
    kRAnkle = 10,
    kLHip = 11,
    kLKnee = 12,
    kLAnkle = 13,
    kREye = 14,
    kLEye = 15,
    kREar = 16,
    kLEar = 17,
};

struct Keypoint {
    double x = 0.0;
    double y = 0.0;
    double confidence = 0.0;  // 0 means missing; (x, y) carry no meaning then

    bool present() const { return confidence > 0.0; }
};

struct Pose {
    std::array<Keypoint, kJointCount> keypoints{};
    int canvas_width = 0;
    int canvas_height = 0;
};

struct PoseSequence {
    std::vector<Pose> poses;
    int source_index_offset = 0;  // number of prepended transition frames
};

/// Similarity map p -> scale * R(rotation) * p + translation.
struct SimilarityTransform {
    double scale = 1.0;
    double rotation = 0.0;  // radians
    Eigen::Vector2d translation = Eigen::Vector2d::Zero();

    Eigen::Vector2d apply(const Eigen::Vector2d& p) const {
        const double c = std::cos(rotation), s = std::sin(rotation);
        return scale * Eigen::Vector2d(c * p.x() - s * p.y(), s * p.x() + c * p.y()) + translation;
    }

    SimilarityTransform inverse() const;
    SimilarityTransform compose(const SimilarityTransform& inner) const;  // this ∘ inner
};

enum class Easing { kLinear, kSmoothstep };

struct AlignmentOptions {
    bool allow_rotation = false;
};

/// Pose JSON: {"canvas_width": int, "canvas_height": int, "frames": [[x0,y0,c0,...,x17,y17,c17], ...]}.
PoseSequence parse_pose_file(const std::string& path);
void write_pose_file(const std::string& path, const PoseSequence& sequence);

/// Least-squares similarity mapping target anchor joints (neck, shoulders, hips)
/// onto the source's. Throws AlignmentError when fewer than 2 anchors are shared.
SimilarityTransform estimate_alignment(const Pose& source, const Pose& target,
                                       const AlignmentOptions& options = {});

/// Maps every confident keypoint; clamps to canvas. clamped_count (optional) reports
/// how many keypoints left the canvas.
Pose apply_alignment(const Pose& pose, const SimilarityTransform& transform,
                     int* clamped_count = nullptr);

/// t intermediate poses between source and first_target; joint missing in either
/// endpoint stays missing throughout.
std::vector<Pose> interpolate_transition(const Pose& source, const Pose& first_target, int t,
                                         Easing easing = Easing::kLinear);

/// [source, transition 1..t, aligned desired 1..M]; one shared transform estimated
/// from the first desired frame keeps the intra-sequence motion intact.
PoseSequence build_target_sequence(const Pose& source_pose, const PoseSequence& desired, int t,
                                   const AlignmentOptions& options = {},
                                   Easing easing = Easing::kLinear);

struct RasterStyle {
    int joint_radius = 4;
    int limb_thickness = 4;
};

/// Standard 18-joint skeleton on black, colored per the OpenPose palette.
/// Missing joints and their incident limbs are not drawn. Deterministic.
ImageU8 rasterize_pose(const Pose& pose, int width, int height, const RasterStyle& style = {});

}  // namespace animate
