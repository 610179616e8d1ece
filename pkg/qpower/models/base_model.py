from fractions import Fraction

from pydantic import BaseModel as PydanticBaseModel


class BaseModel(PydanticBaseModel):
    class Config:
        arbitrary_types_allowed = True
        underscore_attrs_are_private = True
        json_encoders = {Fraction: str}
