from ._decoreq import (
    DecoreqError,
    Equation,
    MemorySignature,
    Proof,
    ProofScript,
    Term,
    check_proof,
    check_semantic,
    commutation_update_lookup,
    infer_kind,
    load_proof_script,
    parse_equation,
    parse_proof_script,
    parse_signature,
    parse_term,
)

__all__ = [
    "DecoreqError",
    "Equation",
    "MemorySignature",
    "Proof",
    "ProofScript",
    "Term",
    "check_proof",
    "check_semantic",
    "commutation_update_lookup",
    "infer_kind",
    "load_proof_script",
    "parse_equation",
    "parse_proof_script",
    "parse_signature",
    "parse_term",
]
