"""Deterministic 32-bit seed derivation via the SplitMix64 finalizer.

Round seeds for parallel runs are outputs of a SplitMix64 stream keyed by
the base seed: position ``round_index`` of the stream is mixed through the
Stafford/Steele avalanche finalizer and truncated to 32 bits.  The 64-bit
outputs are distinct for distinct indices (the finalizer is a bijection),
so 32-bit collisions occur only at the birthday rate.
"""

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_MULT_1 = 0xBF58476D1CE4E5B9
_MIX_MULT_2 = 0x94D049BB133111EB


def derive_round_seed(base_seed: int, round_index: int) -> int:
    """Seed for one independent round of a parallel run.

    Identical ``(base_seed, round_index)`` pairs always yield identical
    outputs; consecutive indices yield unrelated 32-bit values.
    """
    z = (base_seed + (round_index + 1) * _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX_MULT_1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_MULT_2) & _MASK64
    z ^= z >> 31
    return z & 0xFFFFFFFF
