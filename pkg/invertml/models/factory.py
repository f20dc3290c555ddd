from typing import Dict, Type

from .base import FilterModel
from .beta_t_garch import BetaTGarchModel
from .t_location import TLocationModel
from .tv_ar import TvArModel
from .types import ModelKind, ModelSpec


class ModelFactory:
    """Model Factory - create the filter model matching a specification"""

    _registry: Dict[ModelKind, Type[FilterModel]] = {
        ModelKind.BETA_T_GARCH: BetaTGarchModel,
        ModelKind.TV_AR: TvArModel,
        ModelKind.T_LOCATION: TLocationModel,
    }

    @classmethod
    def create_model(cls, spec: ModelSpec) -> FilterModel:
        try:
            model_cls = cls._registry[spec.model_kind]
        except KeyError:
            raise ValueError(f"Unsupported model kind: {spec.model_kind}") from None
        return model_cls(spec)
