"""Verifiable linear-layer inference: sumcheck + KZG commitments over a
prime field, with a ledger-backed publish/verify flow.

The compiled core exposes a mock-backend Session for end-to-end
keygen/commit/prove/verify plus transcript helpers; the `zkfingpt` CLI
covers the full artifact surface including the BLS12-381 backend.
"""

from ._core import Session, transcript_challenge, __version__

__all__ = ["Session", "transcript_challenge", "__version__"]
