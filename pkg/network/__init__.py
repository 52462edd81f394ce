from network.coded import (
    CodedNetwork,
    FaultPlan,
    code_network,
    coded_forward,
    inject_and_forward,
    joint_layer_distance,
)
from network.layered import LayeredNetwork, forward, forward_trace
from network.simulation import exhaustive_single_fault_check, monte_carlo_fault_sim

__all__ = [
    "CodedNetwork",
    "FaultPlan",
    "LayeredNetwork",
    "code_network",
    "coded_forward",
    "exhaustive_single_fault_check",
    "forward",
    "forward_trace",
    "inject_and_forward",
    "joint_layer_distance",
    "monte_carlo_fault_sim",
]
