"""
Bound engine: the explicit degree-d bound, the Phi envelope on tower steps,
the uniform closed forms, route competition and certificates.
"""

from .certificate import (
    BoundCertificate, BoundRoute, Premise, certificate_from_dict, certificate_to_dict,
    load_certificate, save_certificate,
)
from .explicit import explicit_prop_bound
from .phi import phi_eval, vertex
from .closed_forms import ClosedForm, closed_form_bound, closed_forms_for
from .engine import AVAILABLE_ROUTES, best_bound
from .recheck import recheck

__all__ = [
    'BoundCertificate', 'BoundRoute', 'Premise', 'certificate_from_dict', 'certificate_to_dict',
    'load_certificate', 'save_certificate',
    'explicit_prop_bound', 'phi_eval', 'vertex',
    'ClosedForm', 'closed_form_bound', 'closed_forms_for',
    'AVAILABLE_ROUTES', 'best_bound', 'recheck',
]
