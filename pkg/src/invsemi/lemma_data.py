"""Stored derivations of the block lemmas (generated by scripts/find_lemmas.py)."""

LEMMAS = {'drop': {'lhs': 'xuxwx',
          'rhs': 'xuwx',
          'steps': [('6b', 'fwd', 0, {'x': 'x', 'y': 'u', 'z': 'xw'}),
                    ('6b', 'bwd', 1, {'x': 'x', 'y': 'u', 'z': 'w'}),
                    ('6a.1', 'bwd', 0, {'x': 'x', 'y': 'uw'})]},
 'drop-u': {'lhs': 'xxwx', 'rhs': 'xwx', 'steps': [('6a.1', 'bwd', 0, {'x': 'x', 'y': 'w'})]},
 'drop-uw': {'lhs': 'xxx', 'rhs': 'xx', 'steps': [('4e.1', 'bwd', 0, {'x': 'x'})]},
 'drop-w': {'lhs': 'xuxx', 'rhs': 'xux', 'steps': [('6a.3', 'bwd', 0, {'x': 'x', 'y': 'u'})]},
 'outer': {'lhs': 'xaawx',
           'rhs': 'axxwa',
           'steps': [('4e.3', 'fwd', 0, {'x': 'aaw', 'y': 'x'}),
                     ('4e.2', 'fwd', 1, {'x': 'a', 'y': 'wx'}),
                     ('4e.2', 'fwd', 3, {'x': 'aw', 'y': 'x'}),
                     ('4e.4', 'bwd', 0, {'x': 'a', 'y': 'wxx'}),
                     ('6b', 'bwd', 0, {'x': 'a', 'y': 'xx', 'z': 'w'})]},
 'outer-w': {'lhs': 'xaax',
             'rhs': 'axxa',
             'steps': [('4e.2', 'fwd', 0, {'x': 'x', 'y': 'aa'}),
                       ('6a.1', 'bwd', 0, {'x': 'a', 'y': 'x'}),
                       ('6a.6', 'bwd', 0, {'x': 'a', 'y': 'x'})]},
 'square': {'lhs': 'xuawx',
            'rhs': 'xuaawx',
            'steps': [('4e.2', 'fwd', 0, {'x': 'x', 'y': 'uaw'}),
                      ('6a.1', 'fwd', 1, {'x': 'a', 'y': 'wxu'}),
                      ('6a.3', 'fwd', 1, {'x': 'a', 'y': 'awxu'}),
                      ('4e.2', 'bwd', 0, {'x': 'x', 'y': 'uaaw'})]},
 'square-u': {'lhs': 'xawx',
              'rhs': 'xaawx',
              'steps': [('6a.2', 'fwd', 0, {'x': 'x', 'y': 'aw'}),
                        ('4e.4', 'bwd', 1, {'x': 'a', 'y': 'w'}),
                        ('6b', 'bwd', 0, {'x': 'x', 'y': 'a', 'z': 'aw'})]},
 'square-uw': {'lhs': 'xax', 'rhs': 'xaax', 'steps': [('6a.2', 'fwd', 0, {'x': 'x', 'y': 'a'})]},
 'square-w': {'lhs': 'xuax',
              'rhs': 'xuaax',
              'steps': [('6a.2', 'fwd', 0, {'x': 'x', 'y': 'ua'}),
                        ('4e.3', 'bwd', 1, {'x': 'u', 'y': 'a'}),
                        ('6b', 'bwd', 0, {'x': 'x', 'y': 'ua', 'z': 'a'})]},
 'swap': {'lhs': 'xuabwx',
          'rhs': 'xubawx',
          'steps': [('4e.2', 'fwd', 0, {'x': 'x', 'y': 'uabw'}),
                    ('6b', 'fwd', 2, {'x': 'bw', 'y': 'x', 'z': 'ua'}),
                    ('6b', 'fwd', 3, {'x': 'w', 'y': 'ua', 'z': 'xb'}),
                    ('6b', 'bwd', 1, {'x': 'a', 'y': 'wxbu', 'z': 'b'}),
                    ('6b', 'bwd', 0, {'x': 'u', 'y': 'b', 'z': 'awx'}),
                    ('4e.2', 'bwd', 0, {'x': 'x', 'y': 'ubaw'})]},
 'swap-u': {'lhs': 'xabwx',
            'rhs': 'xbawx',
            'steps': [('4e.2', 'fwd', 0, {'x': 'x', 'y': 'abw'}),
                      ('4e.2', 'fwd', 0, {'x': 'a', 'y': 'bwx'}),
                      ('6b', 'fwd', 1, {'x': 'wx', 'y': 'a', 'z': 'b'}),
                      ('4e.2', 'bwd', 1, {'x': 'a', 'y': 'wxb'}),
                      ('4e.2', 'bwd', 0, {'x': 'x', 'y': 'baw'})]},
 'swap-w': {'lhs': 'xuabx',
            'rhs': 'xubax',
            'steps': [('4e.2', 'fwd', 0, {'x': 'x', 'y': 'uab'}),
                      ('4e.2', 'fwd', 1, {'x': 'a', 'y': 'bxu'}),
                      ('6b', 'fwd', 2, {'x': 'xu', 'y': 'a', 'z': 'b'}),
                      ('4e.2', 'bwd', 2, {'x': 'a', 'y': 'xub'}),
                      ('4e.2', 'bwd', 0, {'x': 'x', 'y': 'uba'})]}}
