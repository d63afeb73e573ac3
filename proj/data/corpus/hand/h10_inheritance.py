class Shape:
    sides = 0

    def area(self):
        raise NotImplementedError

    def describe(self):
        return '%s with %d sides' % (type(self).__name__, self.sides)


class Rectangle(Shape):
    sides = 4

    def __init__(self, width, height):
        self.width = width
        self.height = height

    def area(self):
        return self.width * self.height


class Square(Rectangle):
    def __init__(self, size):
        super().__init__(size, size)


class Circle(Shape):
    def __init__(self, radius):
        self.radius = radius

    def area(self):
        return 3.14159 * self.radius ** 2


shapes = [Rectangle(2, 3), Square(4), Circle(1)]
total = sum(s.area() for s in shapes)
