class KannanLabError(Exception):
    """Базовая ошибка лаборатории"""


class SpecError(KannanLabError):
    """JSON-описание пространства, отображения или условия некорректно"""


class MembershipError(KannanLabError):
    def __init__(self, space_name: str, value):
        self.space_name = space_name
        self.value = value
        super().__init__(f"{value!s} is not a point of {space_name}")


class ClosureError(KannanLabError):
    def __init__(self, map_name: str, source, image):
        self.map_name = map_name
        self.source = source
        self.image = image
        super().__init__(f"{map_name} sends {source!s} to {image!s}, outside its space")


class MetricAxiomError(KannanLabError):
    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"metric axiom '{axiom}' fails at {witness}")


class InvalidConditionError(KannanLabError):
    pass


class ConstructionError(KannanLabError):
    """Сертифицированные оценки не дают подходящего индекса"""


class CensusSizeError(KannanLabError):
    pass


class TheoremContradictionError(KannanLabError):
    """Перебор нашёл отображение, противоречащее теореме о неподвижной точке"""

    def __init__(self, defects: list):
        self.defects = defects
        super().__init__(f"{len(defects)} theorem-contradiction defect(s), first: {defects[0]}")
