from pysurgflow.synth.rng import SplitMix64
from pysurgflow.synth.generate import (
    ExpectedTransition,
    SynthExpectation,
    SynthPair,
    SynthSpec,
    generate_pair,
)

__all__ = [
    "ExpectedTransition",
    "SplitMix64",
    "SynthExpectation",
    "SynthPair",
    "SynthSpec",
    "generate_pair",
]
