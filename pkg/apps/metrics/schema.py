import math
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

PEAK = 255


class QualityReport(BaseModel):
    """
    MSE and PSNR between two images. `psnr_db` is `math.inf` exactly when the
    images are identical (mse == 0).
    """

    model_config = ConfigDict(frozen=True)

    mse: Annotated[float, Field(ge=0)]
    psnr_db: float
    samples_compared: Annotated[int, Field(ge=0)]

    @model_validator(mode="after")
    def check_infinity_marker(self):
        if (self.mse == 0) != math.isinf(self.psnr_db):
            raise ValueError("psnr_db is infinite if and only if mse is 0")
        return self

    @property
    def identical(self) -> bool:
        return self.mse == 0


class PsnrResponse(BaseModel):
    samples_compared: int
    mse: float = Field(json_schema_extra={"precision": 6})
    psnr_db: float
    psnr_red_db: float | None = None
    psnr_green_db: float | None = None
    psnr_blue_db: float | None = None
