"""
错误类型定义
所有库内错误均继承 GeometryError（ValueError 子类），CLI 负责映射为退出码
"""


class GeometryError(ValueError):
    """信息几何计算错误基类"""


class NotHermitian(GeometryError):
    """矩阵非 Hermite（偏差超过容差）"""


class NotPositiveDefinite(GeometryError):
    """矩阵非正定"""


class DimensionMismatch(GeometryError):
    """维度不匹配"""


class InvalidState(GeometryError):
    """不是合法的密度矩阵（迹或半正定性不满足）"""


class NotFaithful(GeometryError):
    """密度矩阵存在零特征值，不满足 faithful 要求"""


class NotRegular(GeometryError):
    """函数 f 非 regular（f(0) = 0）"""


class UnknownName(GeometryError):
    """函数目录中不存在该名称"""


class ParameterOutOfRange(GeometryError):
    """函数族参数越界"""


class WeightOutOfRange(GeometryError):
    """权重函数取值不在 [0, 1] 内"""


class QuadratureFailure(GeometryError):
    """数值积分误差估计超过目标精度"""


class MissingWeight(GeometryError):
    """格运算要求函数带有权重函数"""


class UnsupportedDimension(GeometryError):
    """当前操作不支持该维度"""


class RankOutOfRange(GeometryError):
    """随机密度矩阵的秩越界"""


class ProbsNotNormalized(GeometryError):
    """概率分布未归一化"""


class StateFileError(GeometryError):
    """状态文件解析/校验失败

    position: 出错的矩阵位置 (row, col)，与矩阵无关的错误为 None
    """

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        if position is not None:
            message = f"{message} (位置 row={position[0]}, col={position[1]})"
        super().__init__(message)
        self.position = position


class NotInClass(GeometryError):
    """函数未通过 F_op 的抽样检验（归一化/对称/单调）"""


class InvalidChannel(GeometryError):
    """Kraus 算子不满足保迹条件"""
