import pytest

from accept.model import ArmCount, TrialSpec, validate_trial

# the two published trials used throughout: counts from the supplementary data
EARNEST = TrialSpec(
    name="EARNEST",
    control=ArmCount("NRTI", 426, 255),
    treatment=ArmCount("Rtvr", 433, 277),
    unacceptable_difference_pp=0.0,
    expected_difference_pp=10.0,
    assumed_control_rate=0.75,
)

SECOND_LINE = TrialSpec(
    name="SECOND-LINE",
    control=ArmCount("NRTI", 271, 219),
    treatment=ArmCount("Rtvr", 270, 223),
    unacceptable_difference_pp=-12.0,
    expected_difference_pp=0.0,
    assumed_control_rate=0.80,
)


@pytest.fixture
def earnest():
    return validate_trial(EARNEST)


@pytest.fixture
def second_line():
    return validate_trial(SECOND_LINE)


def request_dict(mode="both", seed=7):
    return {
        "trials": [
            {
                "name": "EARNEST",
                "counts": {
                    "control": {"label": "NRTI", "n": 426, "successes": 255},
                    "treatment": {"label": "Rtvr", "n": 433, "successes": 277},
                },
                "assumed_control_rate": 0.75,
                "unacceptable_difference_pp": 0,
                "expected_difference_pp": 10,
            },
            {
                "name": "SECOND-LINE",
                "counts": {
                    "control": {"label": "NRTI", "n": 271, "successes": 219},
                    "treatment": {"label": "Rtvr", "n": 270, "successes": 223},
                },
                "assumed_control_rate": 0.8,
                "unacceptable_difference_pp": -12,
                "expected_difference_pp": 0,
            },
        ],
        "mode": mode,
        "seed": seed,
    }
