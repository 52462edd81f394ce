from robustness.criterion import coded_agreement, distance_criterion
from robustness.distance import class_distances, joint_min_distance, min_distance, relative_distance
from robustness.geometry import l1_distance_to_clipped, l1_distance_to_hyperplane
from robustness.noise import NoisePattern, Witness, noisy_evaluate
from robustness.oracle import is_r_robust, is_ts_robust, robustness_radius

__all__ = [
    "NoisePattern",
    "Witness",
    "class_distances",
    "coded_agreement",
    "distance_criterion",
    "is_r_robust",
    "is_ts_robust",
    "joint_min_distance",
    "l1_distance_to_clipped",
    "l1_distance_to_hyperplane",
    "min_distance",
    "noisy_evaluate",
    "relative_distance",
    "robustness_radius",
]
