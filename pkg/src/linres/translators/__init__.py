from .res import ResolutionProof, ResStep, check_resolution, dp_refutation, res_to_rlin
from .res2 import Res2Proof, Res2Step, check_res2, res2_to_rlin, term_equation
from .rcp import RcpProof, RcpStep, check_rcp, ineq_to_disjunction, rcp_to_rlin
from .pcr import PcrProof, Polynomial, hat, pcr_check, rlin_to_pcr
