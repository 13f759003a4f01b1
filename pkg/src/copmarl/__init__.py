"""Common-operating-picture formation for communicating multi-agent Q-learners.

Desk-scale, fully testable: a scout-and-strike gridworld, range-limited
message routing, learned egocentric state tracking composed with a
field-of-view mask, QMIX-style value decomposition, and an evaluation
battery over out-of-distribution initial states.
"""

__version__ = "0.1.0"

__all__ = ["diffcore", "gridworld", "comms", "copformer", "qlearner", "evalharness"]
