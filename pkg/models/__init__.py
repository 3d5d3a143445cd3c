from models.field_element import FieldElement, NormalFieldElement, UnreducedProduct
from models.normal_basis import NormalBasisCtx, ShiftTable
from models.linpoly import LinPoly
from models.code import GabidulinCode, TddPrecomp, CodeInstance
from models.decoder_state import WbaState, TddWork
from models.reports import ComplexityParams, OpCountReport, BenchReport, RoundtripReport
